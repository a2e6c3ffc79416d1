//! The `.net` text format: `t <tuple-size> eps <value>` on the first line,
//! then one `s <idx> <idx> ...` line per member.

use crate::error::{Error, Result};
use crate::nets::TSubsetFamily;
use crate::set::VertexSet;

pub fn write_net(family: &TSubsetFamily, eps: f64) -> String {
    let mut out = format!("t {} eps {}\n", family.t, eps);
    for m in &family.members {
        out.push('s');
        for i in m.iter() {
            out.push_str(&format!(" {i}"));
        }
        out.push('\n');
    }
    out
}

/// Parses a `.net` file against a known vertex count.
pub fn parse_net(text: &str, n: usize) -> Result<(TSubsetFamily, f64)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let l = l.trim();
        !l.is_empty() && !l.starts_with('#')
    });
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty .net file".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "t" || toks[2] != "eps" {
        return Err(Error::Parse(format!("bad .net header '{header}'")));
    }
    let t: usize = toks[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad tuple size '{}'", toks[1])))?;
    let eps: f64 = toks[3]
        .parse()
        .map_err(|_| Error::Parse(format!("bad eps '{}'", toks[3])))?;
    let mut members = Vec::new();
    for (lineno, line) in lines {
        let line = line.trim();
        let mut parts = line.split_whitespace();
        if parts.next() != Some("s") {
            return Err(Error::Parse(format!(
                "line {}: expected an 's' line",
                lineno + 1
            )));
        }
        let mut idx = Vec::new();
        for tok in parts {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad index '{tok}'", lineno + 1)))?;
            if v >= n {
                return Err(Error::Parse(format!(
                    "line {}: index {v} out of range (n={n})",
                    lineno + 1
                )));
            }
            idx.push(v);
        }
        if idx.len() != t {
            return Err(Error::Parse(format!(
                "line {}: member has {} indices, expected t={t}",
                lineno + 1,
                idx.len()
            )));
        }
        members.push(VertexSet::from_indices(n, &idx));
    }
    let family = TSubsetFamily::new(t, members, "file")
        .map_err(|e| Error::Parse(format!("invalid family: {e}")))?;
    Ok((family, eps))
}
