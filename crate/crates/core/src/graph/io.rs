//! Text edge lists and graph6.

use super::{Graph, GraphError};

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based indices. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::Parse {
                line,
                message: format!("expected two integers, found {:?}", l),
            });
        }
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| GraphError::Parse {
                line,
                message: format!("not a non-negative integer: {s:?}"),
            })
        };
        Ok((num(fields[0])?, num(fields[1])?))
    };

    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| GraphError::Parse {
            line,
            message: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::Parse {
            line: 1,
            message: format!("header declares {m} edges but {seen} were listed"),
        });
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes `g` in graph6 (without the optional `>>graph6<<` header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        bytes.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string; a leading `>>graph6<<` header is accepted.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let data = text.as_bytes();
    if data.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6("byte outside the printable range 63..=126".into()));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match data {
        [] => return Err(GraphError::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(GraphError::Graph6("truncated vertex count".into()));
            }
            let n = rest[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::Graph6("truncated vertex count".into()));
            }
            let n = rest[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (six(*first), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(body[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && six(body[expected - 1]) & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(GraphError::Graph6("non-zero padding bits".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_with_comments() {
        let text = "# a triangle\n3 3\n0 1\n\n1 2 # closing\n2 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        let err = parse_edge_list("3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("declares 2 edges"));
        assert!(parse_edge_list("2 1\n0 5\n").is_err());
        assert!(parse_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings from the graph6 format description.
        let p = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&p), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), p);
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(from_graph6(">>graph6<<A_").unwrap(), k2);
    }

    #[test]
    fn graph6_large_vertex_count_header() {
        let mut g = Graph::empty(63);
        g.add_edge(0, 62).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6("A\u{7f}").is_err());
    }
}
