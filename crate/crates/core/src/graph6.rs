//! graph6 reader/writer and the plain edge-list text format.
//!
//! graph6 stores `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six
//! bits per byte, big-endian, each byte offset by 63.

use crate::error::{FormatError, GraphError};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut bits = BitWriter::new(n);
    // Column-major upper triangle: edge (u, v) with u < v sits at v(v-1)/2 + u.
    let mut positions: Vec<usize> = g.edges().iter().map(|&(u, v)| v * (v - 1) / 2 + u).collect();
    positions.sort_unstable();
    for p in positions {
        bits.set(p);
    }
    bits.finish()
}

pub(crate) fn encode_rows(rows: &[u64]) -> String {
    let n = rows.len();
    let mut bits = BitWriter::new(n);
    for v in 1..n {
        let base = v * (v - 1) / 2;
        for u in 0..v {
            if rows[v] >> u & 1 == 1 {
                bits.set(base + u);
            }
        }
    }
    bits.finish()
}

struct BitWriter {
    out: Vec<u8>,
    body: Vec<u8>,
}

impl BitWriter {
    fn new(n: usize) -> Self {
        let mut out = Vec::new();
        write_size(n, &mut out);
        let total = n * n.saturating_sub(1) / 2;
        BitWriter { out, body: vec![0; total.div_ceil(6)] }
    }

    fn set(&mut self, p: usize) {
        self.body[p / 6] |= 1 << (5 - p % 6);
    }

    fn finish(mut self) -> String {
        self.out.extend(self.body.iter().map(|b| b + 63));
        String::from_utf8(self.out).expect("graph6 bytes are printable ASCII")
    }
}

fn write_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is skipped).
pub fn decode(text: &str) -> Result<Graph, FormatError> {
    decode_line(text, 1)
}

fn decode_line(text: &str, line: usize) -> Result<Graph, FormatError> {
    let err = |message: String| FormatError::Parse { line, message };
    let text = text.trim_end_matches(['\r', '\n']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b:#04x} outside the graph6 range 63..=126")));
    }
    let (n, body) = read_size(bytes).ok_or_else(|| err("truncated size header".into()))?;
    let total = n * n.saturating_sub(1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut p = 0;
    for v in 1..n {
        for u in 0..v {
            if (body[p / 6] - 63) >> (5 - p % 6) & 1 == 1 {
                edges.push((u, v));
            }
            p += 1;
        }
    }
    if total % 6 != 0 && (body[expected - 1] - 63) & ((1 << (6 - total % 6)) - 1) != 0 {
        return Err(err("non-zero padding bits".into()));
    }
    Graph::new(n, &edges).map_err(|source| FormatError::Graph { line, source })
}

fn read_size(bytes: &[u8]) -> Option<(usize, &[u8])> {
    let digit = |b: u8| (b - 63) as usize;
    if bytes[0] != 126 {
        return Some((digit(bytes[0]), &bytes[1..]));
    }
    if bytes.get(1) == Some(&126) {
        let head = bytes.get(2..8)?;
        let n = head.iter().fold(0, |acc, &b| acc << 6 | digit(b));
        return Some((n, &bytes[8..]));
    }
    let head = bytes.get(1..4)?;
    let n = head.iter().fold(0, |acc, &b| acc << 6 | digit(b));
    Some((n, &bytes[4..]))
}

/// Decodes a file with one graph6 string per line; blank lines are skipped.
pub fn decode_all(text: &str) -> Vec<Result<Graph, FormatError>> {
    decode_all_with_lines(text).into_iter().map(|(_, g)| g).collect()
}

/// Like [`decode_all`], paired with 1-based line numbers.
pub fn decode_all_with_lines(text: &str) -> Vec<(usize, Result<Graph, FormatError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, decode_line(l.trim(), i + 1)))
        .collect()
}

/// Edge-list text: a line `n m`, then `m` lines `u v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses blank-line-separated edge-list blocks. Lines starting with `#`
/// are comments.
pub fn read_edge_lists(text: &str) -> Vec<Result<Graph, FormatError>> {
    read_edge_lists_with_lines(text).into_iter().map(|(_, g)| g).collect()
}

/// Like [`read_edge_lists`], paired with the line of each block header.
pub fn read_edge_lists_with_lines(text: &str) -> Vec<(usize, Result<Graph, FormatError>)> {
    let mut graphs = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !block.is_empty() {
                graphs.push((block[0].0, parse_block(&block)));
                block.clear();
            }
            continue;
        }
        block.push((i + 1, line));
    }
    if !block.is_empty() {
        graphs.push((block[0].0, parse_block(&block)));
    }
    graphs
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), FormatError> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(FormatError::Parse {
            line,
            message: format!("expected two non-negative integers, found `{text}`"),
        }),
    }
}

fn parse_block(block: &[(usize, &str)]) -> Result<Graph, FormatError> {
    let (head_line, head) = block[0];
    let (n, m) = parse_pair(head_line, head)?;
    if block.len() - 1 != m {
        return Err(FormatError::Parse {
            line: head_line,
            message: format!("header announces {m} edges, block has {}", block.len() - 1),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for &(line, text) in &block[1..] {
        edges.push(parse_pair(line, text)?);
    }
    Graph::new(n, &edges).map_err(|source| FormatError::Graph { line: head_line, source })
}

impl From<(usize, GraphError)> for FormatError {
    fn from((line, source): (usize, GraphError)) -> Self {
        FormatError::Graph { line, source }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn known_encodings() {
        // Reference strings as produced by nauty's geng/showg.
        assert_eq!(encode(&path(2)), "A_");
        assert_eq!(encode(&path(3)), "Bg");
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(encode(&c5), "Dhc");
        // Petersen graph, the classic example from the format description.
        let petersen = decode("IheA@GUAo").unwrap();
        assert_eq!((petersen.order(), petersen.size()), (10, 15));
        assert!(petersen.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn long_size_header() {
        let g = path(100);
        let s = encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rows_and_edges_agree() {
        let g = Graph::new(7, &[(0, 6), (1, 6), (2, 5), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(encode(&g), encode_rows(&g.bit_rows().unwrap()));
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(decode(">>graph6<<Bg").unwrap(), path(3));
    }

    #[test]
    fn malformed_lines_name_their_line() {
        let results = decode_all("Bg\n\nC~\nC~~\nD?\n");
        assert!(results[0].is_ok());
        assert!(results[1].is_ok());
        assert_eq!(results[2].as_ref().unwrap_err().line(), 4);
        // D? is five isolated vertices' prefix: wrong length.
        assert_eq!(results[3].as_ref().unwrap_err().line(), 5);
        // An empty graph on two vertices decodes but is disconnected.
        assert!(matches!(decode("A?"), Err(FormatError::Graph { .. })));
    }

    #[test]
    fn edge_list_blocks() {
        let text = "# two graphs\n3 2\n0 1\n1 2\n\n2 1\n0 1\n";
        let graphs: Vec<_> = read_edge_lists(text).into_iter().map(Result::unwrap).collect();
        assert_eq!(graphs, vec![path(3), path(2)]);
        assert_eq!(write_edge_list(&path(3)), "3 2\n0 1\n1 2\n");
        let bad = read_edge_lists("3 2\n0 1\n1 x\n");
        assert_eq!(bad[0].as_ref().unwrap_err().line(), 3);
    }
}
