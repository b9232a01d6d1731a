use std::collections::BTreeSet;

use serde::Serialize;

use super::BiprojectionLattice;
use crate::exact::Rational;
use crate::frobobj::{formal_angle, FormalCosine, FrobeniusObject};
use crate::report::{Check, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MobiusTable {
    /// `mu[a][b]`, zero unless `a ≤ b`.
    pub mu: Vec<Vec<i64>>,
}

impl MobiusTable {
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.mu[a][b]
    }
}

/// `μ(a,a) = 1` and `μ(a,b) = −Σ_{a≤c<b} μ(a,c)`.
pub fn mobius(l: &BiprojectionLattice) -> MobiusTable {
    let n = l.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| l.leq[y][x]).count());
    let mut mu = vec![vec![0i64; n]; n];
    for (a, row) in mu.iter_mut().enumerate() {
        for &b in &order {
            if !l.leq[a][b] {
                continue;
            }
            row[b] = if a == b {
                1
            } else {
                -(0..n).filter(|&c| c != b && l.leq[a][c] && l.leq[c][b]).map(|c| row[c]).sum::<i64>()
            };
        }
    }
    MobiusTable { mu }
}

/// `Σ_Y μ(b_Y, b_X)·dim Y`, for the stored basis.
pub fn euler_totient(l: &BiprojectionLattice) -> Rational {
    let mu = mobius(l);
    (0..l.len())
        .filter(|&y| l.leq[y][l.top])
        .map(|y| Rational::from_integer(mu.get(y, l.top).into()) * &l.dims[y])
        .sum()
}

/// The set of subobject dimensions and its sum.
pub fn sigma(l: &BiprojectionLattice) -> (BTreeSet<Rational>, Rational) {
    let set: BTreeSet<Rational> = l.dims.iter().cloned().collect();
    let sum = set.iter().sum();
    (set, sum)
}

/// `a∧(b∨c) = (a∧b)∨(a∧c)` for all triples, or the first failing triple.
pub fn is_distributive(l: &BiprojectionLattice) -> Result<(), [usize; 3]> {
    let (m, j) = (&l.meet_table, &l.join_table);
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m[a][j[b][c]] != j[m[a][b]][m[a][c]] {
                    return Err([a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// `m^s_a` for `s = 0, 1, …` until empty: `m^0_a = {a}`, and `m^{s}_a` is the
/// union of the minimal elements strictly above each member of `m^{s−1}_a`.
pub fn minimal_sets(l: &BiprojectionLattice, a: usize) -> Vec<BTreeSet<usize>> {
    let n = l.len();
    let m = |x: usize| (0..n).filter(move |&y| l.covers(x, y));
    let mut levels = vec![BTreeSet::from([a])];
    loop {
        let next: BTreeSet<usize> = levels.last().unwrap().iter().flat_map(|&x| m(x)).collect();
        if next.is_empty() {
            return levels;
        }
        levels.push(next);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AngleRow {
    pub z: usize,
    pub a: usize,
    pub b: usize,
    pub cosine: FormalCosine,
    pub cos_lt_half: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FinitenessWitness {
    pub report: Report,
    pub angles: Vec<AngleRow>,
}

/// For each element `Z` and distinct `A, B` minimal above `Z`: `A∧B = Z` and
/// the formal cosine of `A, B` over `Z` is below `1/2`.
pub fn finiteness_witness(l: &BiprojectionLattice, f: &FrobeniusObject) -> FinitenessWitness {
    let mut report = Report::new();
    let mut angles = Vec::new();
    for z in 0..l.len() {
        let above: Vec<usize> = (0..l.len()).filter(|&y| l.covers(z, y)).collect();
        for (k, &a) in above.iter().enumerate() {
            for &b in &above[k + 1..] {
                let name = format!("m_{z}: {a}, {b}");
                report.push(Check::from_bool(format!("{name} meet"), l.meet_table[a][b] == z));
                match formal_angle(f, &l.elements[a], &l.elements[b], &l.elements[z]) {
                    Ok(cosine) => {
                        let ok = cosine.cos_less_than_half();
                        report.push(Check::from_bool(format!("{name} cos < 1/2"), ok).with_note(cosine.to_string()));
                        angles.push(AngleRow { z, a, b, cosine, cos_lt_half: ok });
                    }
                    Err(e) => report.push(Check::fail(format!("{name} cos < 1/2"), Some(vec![z, a, b])).with_note(e.to_string())),
                }
            }
        }
    }
    FinitenessWitness { report, angles }
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeAnalytics {
    pub size: usize,
    pub height: usize,
    #[serde(with = "crate::exact::serde_rational")]
    pub totient: Rational,
    #[serde(with = "crate::exact::serde_rational")]
    pub sigma: Rational,
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub divisor_set: Vec<Rational>,
    pub distributive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distributive_witness: Option<[usize; 3]>,
    /// `μ(bottom, top)`.
    pub mobius_bottom_top: i64,
    /// The dimension function used by the totient.
    pub dimension: &'static str,
}

impl LatticeAnalytics {
    pub fn of(l: &BiprojectionLattice) -> Self {
        let (set, sigma) = sigma(l);
        let witness = is_distributive(l).err();
        Self {
            size: l.len(),
            height: l.height(),
            totient: euler_totient(l),
            sigma,
            divisor_set: set.into_iter().collect(),
            distributive: witness.is_none(),
            distributive_witness: witness,
            mobius_bottom_top: mobius(l).get(l.bottom, l.top),
            dimension: "tr(id_Y), identity pivotal structure, stored basis",
        }
    }
}

/// `Σ_{a≤c≤b} μ(c,b) = δ_ab` for every pair.
pub fn mobius_identity_holds(l: &BiprojectionLattice, mu: &MobiusTable) -> bool {
    let n = l.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            let s: i64 = (0..n).filter(|&c| l.leq[a][c] && l.leq[c][b]).map(|c| mu.get(c, b)).sum();
            let expected = i64::from(a == b && l.leq[a][b]);
            !l.leq[a][b] || s == expected
        })
    })
}
