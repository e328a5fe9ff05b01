//! Text formats: graph6, the plain `n m` edge list, and DIMACS `p edge`.

use super::{check_order, Graph, GraphError, MAX_VERTICES};

const OFFSET: u8 = 63;
const LONG_HEADER: u8 = 126;

fn g6_err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encodes `g` in graph6: size header followed by the upper triangle read
/// column by column, six bits per printable byte.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + OFFSET);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_HEADER).contains(&b) {
            return Err(g6_err(offset, format!("byte 0x{b:02x} outside 63..=126")));
        }
    }
    let (n, body_start) = parse_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n });
    }
    check_order(n).map_err(|_| g6_err(0, "graph has no vertices"))?;

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(g6_err(
            body_start + body.len().min(expected),
            format!(
                "expected {expected} adjacency bytes for n={n}, found {}",
                body.len()
            ),
        ));
    }
    let bit_at = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if let Some(k) = (bits..expected * 6).find(|&k| bit_at(k)) {
        return Err(g6_err(body_start + k / 6, "nonzero padding bits"));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let sextets = |from: usize, count: usize| -> Result<usize, GraphError> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| g6_err(bytes.len(), "truncated size header"))?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize))
    };
    if bytes[0] != LONG_HEADER {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.get(1) == Some(&LONG_HEADER) {
        let n = sextets(2, 6)?;
        if n <= 258_047 {
            return Err(g6_err(0, "non-canonical 8-byte size header"));
        }
        Ok((n, 8))
    } else {
        let n = sextets(1, 3)?;
        if n <= 62 {
            return Err(g6_err(0, "non-canonical 4-byte size header"));
        }
        Ok((n, 4))
    }
}

fn edge_err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn parse_index(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| edge_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| edge_err(line, format!("bad {what} `{tok}`")))
}

/// Plain edge list: a header line `n m` followed by `m` lines `u v`
/// (0-based). Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| edge_err(1, "missing header"))?;
    let mut toks = header.split_whitespace();
    let n = parse_index(toks.next(), hline, "vertex count")?;
    let m = parse_index(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(edge_err(hline, "header must be `n m`"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let mut toks = body.split_whitespace();
        let u = parse_index(toks.next(), line, "endpoint")?;
        let v = parse_index(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(edge_err(line, "edge line must be `u v`"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(edge_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, edges)
}

/// DIMACS edge format (`p edge n m`, `e u v` with 1-based labels).
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(edge_err(line_no, "duplicate problem line"));
                }
                toks.next();
                n = Some(parse_index(toks.next(), line_no, "vertex count")?);
            }
            Some("e") => {
                let u = parse_index(toks.next(), line_no, "endpoint")?;
                let v = parse_index(toks.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(edge_err(line_no, "DIMACS labels are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(edge_err(line_no, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| edge_err(1, "missing `p edge n m` line"))?;
    Graph::from_edge_list(n, edges)
}

/// Reads any supported text format, detected from the first meaningful line.
pub fn read_graph(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("c "));
    match first {
        Some(l) if l.starts_with("p ") => parse_dimacs(text),
        Some(l) if l.split_whitespace().count() == 1 && !l.bytes().all(|b| b.is_ascii_digit()) => {
            parse_graph6(l)
        }
        _ => parse_edge_list(text),
    }
}
