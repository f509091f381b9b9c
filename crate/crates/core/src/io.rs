//! graph6 and plain edge-list encodings.
//!
//! graph6 follows the format used by nauty: every byte is `63 + x` for a
//! 6-bit value `x`; the order comes first, then the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ..`,
//! packed big-endian and zero padded.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is not a graph6 character")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 length mismatch: expected {expected} bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    Padding,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn size_header(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![BIAS + n as u8]
    } else if n <= 258_047 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|k| BIAS + ((n >> (6 * k)) & 63) as u8));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|k| BIAS + ((n >> (6 * k)) & 63) as u8));
        out
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = size_header(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim_end();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=BIAS + 63).contains(&byte) {
            return Err(FormatError::BadByte { offset, byte });
        }
        values.push(byte - BIAS);
    }
    let (n, body) = if values[0] < 63 {
        (values[0] as usize, &values[1..])
    } else if values.len() >= 2 && values[1] == 63 {
        if values.len() < 8 {
            return Err(FormatError::Length {
                expected: 8,
                found: values.len(),
            });
        }
        let n = values[2..8]
            .iter()
            .fold(0usize, |a, &x| a << 6 | x as usize);
        (n, &values[8..])
    } else {
        if values.len() < 4 {
            return Err(FormatError::Length {
                expected: 4,
                found: values.len(),
            });
        }
        let n = values[1..4]
            .iter()
            .fold(0usize, |a, &x| a << 6 | x as usize);
        (n, &values[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(FormatError::Length {
            expected: bytes.len() - body.len() + need,
            found: bytes.len(),
        });
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    if (nbits..need * 6).any(bit) {
        return Err(FormatError::Padding);
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// `n` on the first line, then one `i j` pair per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or(FormatError::Empty)?;
    let n: usize = header.parse().map_err(|_| FormatError::EdgeList {
        line: first,
        message: format!("expected vertex count, found {header:?}"),
    })?;
    let mut g = Graph::empty(n);
    for (line, l) in lines {
        let bad = || FormatError::EdgeList {
            line,
            message: format!("expected `i j`, found {l:?}"),
        };
        let mut parts = l.split_whitespace();
        let i: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let j: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        g.add_edge(i, j).map_err(|e| FormatError::EdgeList {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(g)
}

/// True when the text looks like an edge list rather than graph6. graph6
/// bytes start at `?` (63), so a leading digit cannot be graph6.
pub fn is_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.as_bytes()[0].is_ascii_digit())
}

/// Parses either an edge list (one graph) or graph6 (one graph per line).
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, FormatError> {
    if is_edge_list(text) {
        return Ok(vec![from_edge_list(text)?]);
    }
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(from_graph6)
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(graphs)
}

/// Parses exactly one graph in either format.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut graphs = parse_graphs(text)?;
    if graphs.len() != 1 {
        return Err(FormatError::Length {
            expected: 1,
            found: graphs.len(),
        });
    }
    Ok(graphs.pop().expect("one graph"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // nauty: C5 is "Dhc", K4 is "C~", P2 is "A_"
        assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::path(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        // 0-2, 0-4, 1-3, 3-4 on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn decodes_with_header_and_newline() {
        let g = from_graph6(">>graph6<<Dhc\n").unwrap();
        assert_eq!(g, Graph::cycle(5).unwrap());
    }

    #[test]
    fn extended_size_header() {
        let g = Graph::cycle(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
        assert_eq!(size_header(258_048)[..2], [126, 126]);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(from_graph6(""), Err(FormatError::Empty));
        assert!(matches!(
            from_graph6("D h"),
            Err(FormatError::BadByte { .. })
        ));
        assert!(matches!(from_graph6("Dh"), Err(FormatError::Length { .. })));
        assert!(matches!(
            from_graph6("Dhcc"),
            Err(FormatError::Length { .. })
        ));
        // C5 needs 10 bits; the last two of "Dhc" are padding
        assert_eq!(from_graph6("Dhd"), Err(FormatError::Padding));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(4).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(from_edge_list(&text).unwrap(), g);
        assert!(from_edge_list("3\n0 0\n").is_err());
        assert!(from_edge_list("3\n0 x\n").is_err());
        assert!(from_edge_list("three\n").is_err());
    }

    #[test]
    fn auto_detection() {
        assert!(is_edge_list("5\n0 1\n"));
        assert!(is_edge_list("0 1"));
        assert!(!is_edge_list("Dhc"));
        let gs = parse_graphs("Dhc\n# comment\nC~\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(
            parse_graph("3\n0 1\n1 2\n").unwrap(),
            Graph::path(3).unwrap()
        );
        assert!(parse_graph("Dhc\nC~").is_err());
    }
}
