//! graph6 short-form encoding (interchange with nauty and friends).
//!
//! Header byte `63 + n`, then the upper triangle of the adjacency matrix in
//! column-major order (`x_{0,1}; x_{0,2}, x_{1,2}; ...`), packed 6 bits per
//! byte, each byte offset by 63. Only the short form (`n <= 62`) is
//! supported; the long form is rejected with a distinct error.

use super::{Graph, GraphError};

const OFFSET: u8 = 63;
const MAX_SHORT_N: usize = 62;

fn payload_len(n: usize) -> usize {
    let bits = n * n.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

/// Parses a short-form graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&header, payload) = bytes.split_first().ok_or(GraphError::Graph6Empty)?;
    if header == b'~' {
        return Err(GraphError::Graph6UnsupportedSize);
    }
    if !(OFFSET..=126).contains(&header) {
        return Err(GraphError::Graph6BadByte {
            byte: header,
            pos: 0,
        });
    }
    let n = (header - OFFSET) as usize;
    if payload.len() != payload_len(n) {
        return Err(GraphError::Graph6PayloadLength {
            got: payload.len(),
            expected: payload_len(n),
            n,
        });
    }
    for (i, &b) in payload.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(GraphError::Graph6BadByte { byte: b, pos: i + 1 });
        }
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = payload[bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // remaining bits of the final byte must be zero padding
    while !bit.is_multiple_of(6) {
        let byte = payload[bit / 6] - OFFSET;
        if byte >> (5 - bit % 6) & 1 == 1 {
            return Err(GraphError::Graph6BadPadding);
        }
        bit += 1;
    }
    Graph::from_edge_list(n, edges)
}

/// Encodes a graph in short-form graph6. Requires `n <= 62`.
pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > MAX_SHORT_N {
        return Err(GraphError::Graph6UnsupportedSize);
    }
    let mut out = vec![OFFSET + n as u8];
    out.resize(1 + payload_len(n), OFFSET);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                out[1 + bit / 6] += 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_path};

    #[test]
    fn single_vertex_is_at_sign() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.m(), 0);
        assert_eq!(write_graph6(&k1).unwrap(), "@");
    }

    #[test]
    fn zero_vertex_graph_is_question_mark() {
        let empty = parse_graph6("?").unwrap();
        assert_eq!((empty.n(), empty.m()), (0, 0));
        assert_eq!(write_graph6(&empty).unwrap(), "?");
    }

    #[test]
    fn k4_is_c_tilde() {
        // all six upper-triangle bits set: 111111 -> 63 + 63 = '~'
        assert_eq!(write_graph6(&gen_complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), gen_complete(4).unwrap());
    }

    #[test]
    fn p4_is_c_h() {
        // bits 1,01,001 -> 101001 -> 41 + 63 = 'h'
        assert_eq!(write_graph6(&gen_path(4).unwrap()).unwrap(), "Ch");
        assert_eq!(parse_graph6("Ch").unwrap(), gen_path(4).unwrap());
    }

    #[test]
    fn five_vertex_reference_string() {
        // cross-checked against nauty's encoding of this labeled graph
        let g = Graph::from_edge_list(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(""), Err(GraphError::Graph6Empty));
        assert_eq!(parse_graph6("~??"), Err(GraphError::Graph6UnsupportedSize));
        assert!(matches!(
            parse_graph6(" C~"),
            Err(GraphError::Graph6BadByte { pos: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(GraphError::Graph6PayloadLength {
                got: 0,
                expected: 1,
                n: 4
            })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(GraphError::Graph6PayloadLength { .. })
        ));
        // n = 5 needs 10 bits; the last two bits of the second byte are padding
        assert_eq!(parse_graph6("D??"), Ok(Graph::from_edge_list(5, []).unwrap()));
        assert_eq!(parse_graph6("D?A"), Err(GraphError::Graph6BadPadding));
    }

    #[test]
    fn oversized_graph_is_rejected_by_writer() {
        let g = Graph::from_edge_list(63, []).unwrap();
        assert_eq!(write_graph6(&g), Err(GraphError::Graph6UnsupportedSize));
    }
}
