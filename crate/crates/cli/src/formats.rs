//! Graph file formats: the primary edge-list text format and graph6.

use truemper::Graph;

/// Comment-stripped, trimmed, non-empty lines with 1-based line numbers.
/// '#' starts a comment anywhere in a line.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        })
        .collect()
}

fn parse_usize(token: &str, what: &str, line_no: usize) -> Result<usize, String> {
    token
        .parse()
        .map_err(|_| format!("line {line_no}: {what} is not a non-negative integer: {token:?}"))
}

/// Parses the primary format: a header line "n m", then exactly m lines
/// "u v" with 0-based endpoints. Self-loops, out-of-range endpoints and
/// duplicate edges (in either orientation) are rejected.
pub fn parse_edgelist(text: &str) -> Result<Graph, String> {
    let lines = significant_lines(text);
    let Some(&(header_no, header)) = lines.first() else {
        return Err("empty input: expected a header line \"n m\"".into());
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(format!(
            "line {header_no}: expected header \"n m\", got {header:?}"
        ));
    }
    let n = parse_usize(fields[0], "vertex count", header_no)?;
    let m = parse_usize(fields[1], "edge count", header_no)?;
    if lines.len() - 1 != m {
        return Err(format!(
            "header declares {m} edges but {} edge lines follow",
            lines.len() - 1
        ));
    }
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for &(line_no, line) in &lines[1..] {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(format!(
                "line {line_no}: expected an edge \"u v\", got {line:?}"
            ));
        }
        let u = parse_usize(fields[0], "endpoint", line_no)?;
        let v = parse_usize(fields[1], "endpoint", line_no)?;
        if u == v {
            return Err(format!("line {line_no}: self-loop at vertex {u}"));
        }
        if u >= n || v >= n {
            return Err(format!(
                "line {line_no}: endpoint out of range for {n} vertices"
            ));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(format!(
                "line {line_no}: duplicate edge {u} {v} (possibly reversed)"
            ));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, &edges))
}

pub fn render_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn decode_g6_order(bytes: &[u8]) -> Result<(usize, usize), String> {
    match bytes {
        [] => Err("empty graph6 line".into()),
        [b, ..] if *b != 126 => Ok(((*b - 63) as usize, 1)),
        [_, b, ..] if *b != 126 => {
            if bytes.len() < 4 {
                return Err("truncated graph6 vertex count".into());
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize);
            Ok((n, 4))
        }
        _ => {
            if bytes.len() < 8 {
                return Err("truncated graph6 vertex count".into());
            }
            let n = bytes[2..8]
                .iter()
                .fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize);
            Ok((n, 8))
        }
    }
}

/// Parses one graph6 line (optionally prefixed ">>graph6<<"): the vertex
/// count, then the upper triangle of the adjacency matrix in column-major
/// order, packed big-endian six bits per byte with zero padding.
pub fn parse_graph6(line: &str) -> Result<Graph, String> {
    let s = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
    let bytes = s.as_bytes();
    if let Some(bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(format!(
            "invalid graph6 byte {bad:#04x}: every byte must lie in 63..=126"
        ));
    }
    let (n, pos) = decode_g6_order(bytes)?;
    if n > 10_000_000 {
        return Err(format!("graph6 vertex count {n} is unreasonably large"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[pos..];
    if body.len() != bits.div_ceil(6) {
        return Err(format!(
            "graph6 body has {} bytes, expected {} for {n} vertices",
            body.len(),
            bits.div_ceil(6)
        ));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit_at(k) == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    for pad in bits..body.len() * 6 {
        if bit_at(pad) != 0 {
            return Err("graph6 padding bits must be zero".into());
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

pub fn render_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        bytes.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body_start = bytes.len();
    bytes.resize(body_start + bits.div_ceil(6), 63);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                bytes[body_start + k / 6] += 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut s = String::from_utf8(bytes).expect("graph6 bytes are ASCII");
    s.push('\n');
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Edgelist,
    Graph6,
}

/// A first significant line of exactly two integer tokens means the
/// edge-list format; anything else is treated as graph6. Unambiguous:
/// graph6 lines never contain whitespace.
pub fn sniff(text: &str) -> Format {
    match significant_lines(text).first() {
        Some(&(_, line)) => {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
                Format::Edgelist
            } else {
                Format::Graph6
            }
        }
        None => Format::Edgelist,
    }
}

/// Parses the sole graph in `text` under the given (or sniffed) format.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph, String> {
    match format.unwrap_or_else(|| sniff(text)) {
        Format::Edgelist => parse_edgelist(text),
        Format::Graph6 => {
            let lines = significant_lines(text);
            match lines.as_slice() {
                [] => Err("empty input: expected one graph6 line".into()),
                [(_, line)] => parse_graph6(line),
                more => Err(format!(
                    "expected one graph6 line, found {} non-empty lines",
                    more.len()
                )),
            }
        }
    }
}

pub fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => render_edgelist(g),
        Format::Graph6 => render_graph6(g),
    }
}
