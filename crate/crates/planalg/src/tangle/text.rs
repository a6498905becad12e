//! A small textual format for planar networks.
//!
//! ```text
//! # comment
//! boundary 2          # number of bottom (= top) boundary points
//! box a e             # payload: one | e | x
//! strand b0 a.0       # ports: b<i>, t<i>, <name>.<leg> with legs 0..3
//! strand b1 a.1
//! strand a.3 t0
//! strand a.2 t1
//! loop 1              # optional free closed loops
//! ```

use super::net::{Port, TangleBox, TangleNet};
use super::TangleError;
use crate::baxter::TwoBox;
use crate::scalar::{Alphabet, RationalFn};
use std::collections::HashMap;
use std::sync::Arc;

fn payload(alph: &Arc<Alphabet>, name: &str) -> Option<TwoBox> {
    let zero = RationalFn::zero(alph);
    let one = RationalFn::one(alph);
    match name {
        "one" => Some(TwoBox::new(one, zero.clone(), zero)),
        "e" => Some(TwoBox::new(zero.clone(), one, zero)),
        "x" => Some(TwoBox::new(zero.clone(), zero, one)),
        _ => None,
    }
}

fn parse_port(
    tok: &str,
    n: usize,
    names: &HashMap<String, usize>,
) -> Result<Port, String> {
    if let Some((name, leg)) = tok.split_once('.') {
        let box_id = *names
            .get(name)
            .ok_or_else(|| format!("unknown box `{name}`"))?;
        let leg: u8 = leg.parse().map_err(|_| format!("bad leg in `{tok}`"))?;
        if leg > 3 {
            return Err(format!("leg {leg} out of range in `{tok}`"));
        }
        return Ok(Port::Leg { box_id, leg });
    }
    let (kind, idx) = tok.split_at(1);
    let i: usize = idx.parse().map_err(|_| format!("bad port `{tok}`"))?;
    if i >= n {
        return Err(format!("boundary index {i} out of range in `{tok}`"));
    }
    match kind {
        "b" => Ok(Port::Bottom(i)),
        "t" => Ok(Port::Top(i)),
        _ => Err(format!("bad port `{tok}`")),
    }
}

/// Parse the textual network format; box payload coefficients live in
/// `alph`.
pub fn parse_net(src: &str, alph: &Arc<Alphabet>) -> Result<TangleNet, TangleError> {
    let mut n: Option<usize> = None;
    let mut names: HashMap<String, usize> = HashMap::new();
    let mut boxes: Vec<TangleBox> = Vec::new();
    let mut strands: Vec<(Port, Port)> = Vec::new();
    let mut free_loops = 0usize;

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let fail = |msg: String| TangleError::Parse { line, msg };
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks.as_slice() {
            ["boundary", k] => {
                if n.is_some() {
                    return Err(fail("duplicate `boundary` line".into()));
                }
                n = Some(k.parse().map_err(|_| fail(format!("bad boundary size `{k}`")))?);
            }
            ["box", name, kind] => {
                if names.contains_key(*name) {
                    return Err(fail(format!("duplicate box `{name}`")));
                }
                let p = payload(alph, kind)
                    .ok_or_else(|| fail(format!("unknown payload `{kind}`")))?;
                names.insert((*name).into(), boxes.len());
                boxes.push(TangleBox { payload: p });
            }
            ["strand", a, b] => {
                let nn = n.ok_or_else(|| fail("`boundary` must come first".into()))?;
                let pa = parse_port(a, nn, &names).map_err(fail)?;
                let pb = parse_port(b, nn, &names).map_err(fail)?;
                strands.push((pa, pb));
            }
            ["loop", k] => {
                free_loops += k
                    .parse::<usize>()
                    .map_err(|_| fail(format!("bad loop count `{k}`")))?;
            }
            _ => return Err(fail(format!("unrecognised line `{text}`"))),
        }
    }
    let n = n.ok_or(TangleError::Parse { line: 0, msg: "missing `boundary` line".into() })?;
    TangleNet::new(n, boxes, strands, free_loops)
}
