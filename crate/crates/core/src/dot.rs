//! Graphviz output for explored components and orbit segments.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::analysis::Exploration;
use crate::cartan::cover_label;
use crate::json::path_to_json;
use crate::lspath::LSPath;
use crate::orbit::StarOrbit;

pub const LABEL_CAP: usize = 64;

fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

/// Node id: prefix of the hash of the path's JSON record.
pub fn node_id(p: &LSPath) -> String {
    format!("n{}", &digest(&path_to_json(p))[..16])
}

/// Compact notation, cut to [`LABEL_CAP`] characters with a hash suffix.
pub fn node_label(p: &LSPath) -> String {
    let full = p.compact();
    if full.chars().count() <= LABEL_CAP {
        return full;
    }
    let suffix = format!("…#{}", &digest(&full)[..8]);
    let keep = LABEL_CAP - suffix.chars().count();
    let mut out: String = full.chars().take(keep).collect();
    out.push_str(&suffix);
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn exploration_dot(ex: &Exploration) -> String {
    let mut out = String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
    let ids: Vec<String> = ex.nodes.iter().map(node_id).collect();
    for (p, id) in ex.nodes.iter().zip(&ids) {
        writeln!(out, "  {id} [label=\"{}\"];", escape(&node_label(p))).unwrap();
    }
    for e in &ex.edges {
        writeln!(out, "  {} -> {} [label=\"f{}\"];", ids[e.from], ids[e.to], e.i).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The chain `x_lo λ → … → x_hi λ`, each arrow labelled by the simple root
/// that separates its ends.
pub fn hasse_dot(orbit: &StarOrbit, lo: i64, hi: i64) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=LR;\n");
    for m in lo..=hi {
        let w = orbit.xm_lambda(m);
        writeln!(
            out,
            "  x{} [label=\"x_{m} λ = {}\"];",
            m.to_string().replace('-', "m"),
            escape(&w.fundamental_notation())
        )
        .unwrap();
    }
    for m in (lo + 1)..=hi {
        writeln!(
            out,
            "  x{} -> x{} [label=\"a{}\"];",
            (m - 1).to_string().replace('-', "m"),
            m.to_string().replace('-', "m"),
            cover_label(m)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
