//! Line-oriented text formats. Every writer emits the canonical form and
//! every parser reports the 1-based line of the first problem.
//!
//! ```text
//! p edge <n> <m>          graph header, then m lines `e <u> <v>`
//! 3dm <n> <|T|>           3DM header, then |T| lines `t <r> <b> <y>`
//! cut <kind> <M> <t>      cut header, then t lines `s <center> <leaf>...`
//! v <id> <TAG> <i> [<j>]  one role per gadget vertex
//! kappa <kind> <M> = <value|none>
//! ```
//!
//! Vertex ids in files are 1-based; lines starting with `c` are comments in
//! every format.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::cut::{CutFamily, CutKind, Star};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::npo::{ThreeDmInstance, Triple};
use crate::reductions::VertexRole;
use crate::solver::SolveResult;

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, words)),
        }
    })
}

fn end_line(text: &str) -> usize {
    text.lines().count() + 1
}

fn number(line: usize, word: &str, what: &str) -> Result<usize> {
    word.parse().map_err(|_| {
        Error::parse(
            line,
            format!("{what} `{word}` is not a non-negative integer"),
        )
    })
}

/// 1-based id in `1..=n` (unbounded when `n` is `None`), returned 0-based.
fn id(line: usize, word: &str, n: Option<usize>) -> Result<usize> {
    let v = number(line, word, "vertex id")?;
    if v == 0 || n.is_some_and(|n| v > n) {
        let range = n.map_or("1..".to_string(), |n| format!("1..={n}"));
        return Err(Error::parse(line, format!("vertex id {v} outside {range}")));
    }
    Ok(v - 1)
}

fn arity(line: usize, words: &[&str], want: usize, shape: &str) -> Result<()> {
    if words.len() != want {
        return Err(Error::parse(line, format!("expected `{shape}`")));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end_line(text), "missing `p edge <n> <m>` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "edge" {
        return Err(Error::parse(hl, "expected `p edge <n> <m>` header"));
    }
    let n = number(hl, header[2], "vertex count")?;
    let m = number(hl, header[3], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashMap::new();
    for (ln, words) in lines {
        if words[0] != "e" {
            return Err(Error::parse(
                ln,
                format!("unexpected line type `{}`", words[0]),
            ));
        }
        arity(ln, &words, 3, "e <u> <v>")?;
        if edges.len() == m {
            return Err(Error::parse(
                ln,
                format!("more than the declared {m} edges"),
            ));
        }
        let u = id(ln, words[1], Some(n))?;
        let v = id(ln, words[2], Some(n))?;
        if u == v {
            return Err(Error::parse(ln, format!("self-loop at vertex {}", u + 1)));
        }
        if let Some(first) = seen.insert((u.min(v), u.max(v)), ln) {
            return Err(Error::parse(
                ln,
                format!("duplicate edge {} {} (first on line {first})", u + 1, v + 1),
            ));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            end_line(text),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_3dm(text: &str) -> Result<ThreeDmInstance> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end_line(text), "missing `3dm <n> <|T|>` header"))?;
    if header.len() != 3 || header[0] != "3dm" {
        return Err(Error::parse(hl, "expected `3dm <n> <|T|>` header"));
    }
    let n = number(hl, header[1], "n")?;
    let count = number(hl, header[2], "triple count")?;
    let mut triples = Vec::with_capacity(count);
    let mut seen = HashMap::new();
    for (ln, words) in lines {
        if words[0] != "t" {
            return Err(Error::parse(
                ln,
                format!("unexpected line type `{}`", words[0]),
            ));
        }
        arity(ln, &words, 4, "t <r> <b> <y>")?;
        if triples.len() == count {
            return Err(Error::parse(
                ln,
                format!("more than the declared {count} triples"),
            ));
        }
        let mut c = [0; 3];
        for (slot, w) in c.iter_mut().zip(&words[1..]) {
            *slot = id(ln, w, Some(n))? + 1;
        }
        let t = Triple::new(c[0], c[1], c[2]);
        if let Some(first) = seen.insert(t, ln) {
            return Err(Error::parse(
                ln,
                format!("duplicate triple (first on line {first})"),
            ));
        }
        triples.push(t);
    }
    if triples.len() != count {
        return Err(Error::parse(
            end_line(text),
            format!("header declares {count} triples, found {}", triples.len()),
        ));
    }
    Ok(ThreeDmInstance::new(n, triples))
}

pub fn write_3dm(inst: &ThreeDmInstance) -> String {
    let mut out = format!("3dm {} {}\n", inst.n, inst.triples.len());
    for t in &inst.triples {
        let _ = writeln!(out, "t {} {} {}", t.r, t.b, t.y);
    }
    out
}

fn parse_kind(line: usize, word: &str) -> Result<CutKind> {
    match word {
        "structure" => Ok(CutKind::Structure),
        "substructure" => Ok(CutKind::Substructure),
        _ => Err(Error::parse(
            line,
            format!("kind `{word}` is neither `structure` nor `substructure`"),
        )),
    }
}

/// Parses star lines following a `cut` header already consumed.
fn parse_stars<'a>(
    text: &str,
    lines: impl Iterator<Item = (usize, Vec<&'a str>)>,
    kind: CutKind,
    m: usize,
    t: usize,
) -> Result<CutFamily> {
    let mut stars = Vec::with_capacity(t);
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (ln, words) in lines {
        if words[0] != "s" {
            return Err(Error::parse(
                ln,
                format!("unexpected line type `{}`", words[0]),
            ));
        }
        if words.len() < 2 {
            return Err(Error::parse(ln, "expected `s <center> <leaf>...`"));
        }
        if stars.len() == t {
            return Err(Error::parse(
                ln,
                format!("more than the declared {t} elements"),
            ));
        }
        let center = id(ln, words[1], None)?;
        let leaves = words[2..]
            .iter()
            .map(|w| id(ln, w, None))
            .collect::<Result<Vec<_>>>()?;
        if leaves.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::parse(ln, "leaves must be strictly increasing"));
        }
        if leaves.len() == 1 && leaves[0] < center {
            return Err(Error::parse(
                ln,
                "a single-edge element names its smaller endpoint as center",
            ));
        }
        if !kind.admits(leaves.len(), m) {
            return Err(Error::parse(
                ln,
                format!("{kind} element has {} leaves but M = {m}", leaves.len()),
            ));
        }
        let star = Star::new(center, leaves).map_err(|e| Error::parse(ln, e.to_string()))?;
        for v in star.vertices().iter() {
            if let Some(first) = owner.insert(v, ln) {
                return Err(Error::parse(
                    ln,
                    format!("vertex {} already used on line {first}", v + 1),
                ));
            }
        }
        stars.push(star);
    }
    if stars.len() != t {
        return Err(Error::parse(
            end_line(text),
            format!("header declares {t} elements, found {}", stars.len()),
        ));
    }
    CutFamily::new(kind, m, stars).map_err(|e| Error::parse(end_line(text), e.to_string()))
}

pub fn parse_cut(text: &str) -> Result<CutFamily> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end_line(text), "missing `cut <kind> <M> <t>` header"))?;
    if header.len() != 4 || header[0] != "cut" {
        return Err(Error::parse(hl, "expected `cut <kind> <M> <t>` header"));
    }
    let kind = parse_kind(hl, header[1])?;
    let m = number(hl, header[2], "M")?;
    let t = number(hl, header[3], "element count")?;
    parse_stars(text, lines, kind, m, t)
}

pub fn write_cut(cut: &CutFamily) -> String {
    let mut out = format!("cut {} {} {}\n", cut.kind(), cut.m(), cut.len());
    for s in cut.stars() {
        out.push_str("s ");
        out.push_str(&(s.center() + 1).to_string());
        for l in s.leaves() {
            let _ = write!(out, " {}", l + 1);
        }
        out.push('\n');
    }
    out
}

pub fn parse_roles(text: &str) -> Result<Vec<VertexRole>> {
    let mut roles = Vec::new();
    for (ln, words) in content_lines(text) {
        if words[0] != "v" || words.len() < 4 {
            return Err(Error::parse(ln, "expected `v <id> <TAG> <i> [<j>]`"));
        }
        let v = number(ln, words[1], "vertex id")?;
        if v != roles.len() + 1 {
            return Err(Error::parse(
                ln,
                format!(
                    "vertex id {v} out of sequence, expected {}",
                    roles.len() + 1
                ),
            ));
        }
        let pair = matches!(words[2], "CLIQ" | "UBLK");
        arity(
            ln,
            &words,
            if pair { 5 } else { 4 },
            "v <id> <TAG> <i> [<j>]",
        )?;
        let mut idx = [0; 2];
        for (slot, w) in idx.iter_mut().zip(&words[3..]) {
            *slot = number(ln, w, "role index")?;
            if *slot == 0 {
                return Err(Error::parse(ln, "role indices are 1-based"));
            }
        }
        let [i, j] = idx;
        roles.push(match words[2] {
            "TRIPLE" => VertexRole::Triple(i),
            "ELEM" => VertexRole::Element(i),
            "CLIQ" => VertexRole::CliqueV { i, j },
            "UBLK" => VertexRole::UBlock { index: i, block: j },
            "UPRM" => VertexRole::UPrime(i),
            "ORIG" => VertexRole::Original(i),
            tag => return Err(Error::parse(ln, format!("unknown role tag `{tag}`"))),
        });
    }
    Ok(roles)
}

pub fn write_roles(roles: &[VertexRole]) -> String {
    let mut out = String::new();
    for (v, r) in roles.iter().enumerate() {
        let _ = writeln!(out, "v {} {r}", v + 1);
    }
    out
}

/// `kappa <kind> <M> = <value|none>` followed by the certificate.
pub fn write_result(res: &SolveResult) -> String {
    let value = res.value.map_or("none".to_string(), |v| v.to_string());
    let mut out = format!("kappa {} {} = {value}\n", res.kind, res.m);
    if let Some(cert) = &res.certificate {
        out.push_str(&write_cut(cert));
    }
    out
}

/// Reads back what [`write_result`] produced: the kind, `M`, the value and
/// the certificate.
pub fn parse_result(text: &str) -> Result<(CutKind, usize, Option<usize>, Option<CutFamily>)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end_line(text), "missing `kappa` line"))?;
    if header.len() != 5 || header[0] != "kappa" || header[3] != "=" {
        return Err(Error::parse(
            hl,
            "expected `kappa <kind> <M> = <value|none>`",
        ));
    }
    let kind = parse_kind(hl, header[1])?;
    let m = number(hl, header[2], "M")?;
    let value = match header[4] {
        "none" => None,
        w => Some(number(hl, w, "value")?),
    };
    let cert = match lines.next() {
        None => None,
        Some((cl, words)) => {
            if words.len() != 4 || words[0] != "cut" {
                return Err(Error::parse(cl, "expected `cut <kind> <M> <t>` header"));
            }
            let ck = parse_kind(cl, words[1])?;
            let cm = number(cl, words[2], "M")?;
            let t = number(cl, words[3], "element count")?;
            if ck != kind || cm != m || Some(t) != value {
                return Err(Error::parse(
                    cl,
                    "certificate disagrees with the kappa line",
                ));
            }
            Some(parse_stars(text, lines, ck, cm, t)?)
        }
    };
    if value.is_some() && cert.is_none() {
        return Err(Error::parse(
            end_line(text),
            "value given without a certificate",
        ));
    }
    Ok((kind, m, value, cert))
}
