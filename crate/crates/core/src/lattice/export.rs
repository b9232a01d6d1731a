use std::fmt::Write;

use super::{BiprojectionLattice, FinitenessWitness};

/// Hasse diagram: covering edges only, bottom at the bottom.
pub fn to_dot(l: &BiprojectionLattice, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", name.replace('"', "'")).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for (k, e) in l.elements.iter().enumerate() {
        writeln!(s, "  n{k} [label=\"{}\\ntr={} dim={}\"];", e.label.replace('"', "'"), e.trace, l.dims[k]).unwrap();
    }
    for a in 0..l.len() {
        for b in 0..l.len() {
            if l.covers(a, b) {
                writeln!(s, "  n{a} -> n{b};").unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

/// One row per separated pair: `z,a,b,p,q,cos_lt_half`.
pub fn angles_csv(w: &FinitenessWitness) -> String {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["z", "a", "b", "p", "q", "cos_lt_half"]).expect("in-memory write");
    for r in &w.angles {
        out.write_record([
            r.z.to_string(),
            r.a.to_string(),
            r.b.to_string(),
            r.cosine.p.to_string(),
            r.cosine.q.to_string(),
            r.cos_lt_half.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(out.into_inner().expect("in-memory flush")).expect("ASCII")
}
