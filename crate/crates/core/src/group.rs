//! Finite groups by Cayley table, with the identity at index 0.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub name: String,
    /// `table[a][b]` is the index of `a·b`.
    pub table: Vec<Vec<usize>>,
    /// Permutation realising each element, when built from permutations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perms: Option<Vec<Vec<usize>>>,
}

/// A subgroup as a sorted set of element indices.
pub type Subgroup = BTreeSet<usize>;

impl FiniteGroup {
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Invalid("Cayley table must be square with entries in range".into()));
        }
        let g = Self { name: name.into(), table, perms: None };
        if (0..n).any(|a| g.mul(0, a) != a || g.mul(a, 0) != a) {
            return Err(Error::Invalid("index 0 is not the identity".into()));
        }
        for a in 0..n {
            let row: BTreeSet<_> = g.table[a].iter().collect();
            let col: BTreeSet<_> = (0..n).map(|b| g.mul(b, a)).collect();
            if row.len() != n || col.len() != n {
                return Err(Error::Invalid("Cayley table is not a Latin square".into()));
            }
            for b in 0..n {
                for c in 0..n {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::Invalid(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Closure of a set of permutations of `0..degree` under composition.
    /// `(p·q)(x) = p(q(x))`.
    pub fn from_permutations(name: impl Into<String>, generators: &[Vec<usize>]) -> Result<Self> {
        let degree = generators.first().map_or(1, Vec::len);
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                if g.len() != degree {
                    return Err(Error::Invalid("generators of different degree".into()));
                }
                let p: Vec<usize> = (0..degree).map(|x| g[elems[i][x]]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let table = elems
            .iter()
            .map(|p| {
                elems
                    .iter()
                    .map(|q| index[&(0..degree).map(|x| p[q[x]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        let mut g = Self::from_table(name, table)?;
        g.perms = Some(elems);
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(format!("C{n}"), table).expect("cyclic table")
    }

    pub fn klein_four() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::from_table("V4", table).expect("Klein table")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]]).expect("S3")
    }

    /// Symmetries of a square acting on its vertices.
    pub fn dihedral4() -> Self {
        Self::from_permutations("D4", &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).expect("D4")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).expect("Latin square")
    }

    /// Sign of each element as a permutation, if permutation data is present.
    pub fn signs(&self) -> Option<Vec<i64>> {
        let perms = self.perms.as_ref()?;
        Some(
            perms
                .iter()
                .map(|p| {
                    let inversions = (0..p.len())
                        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if inversions % 2 == 0 { 1 } else { -1 }
                })
                .collect(),
        )
    }

    pub fn is_subgroup(&self, k: &Subgroup) -> bool {
        k.contains(&0) && k.iter().all(|&a| k.iter().all(|&b| k.contains(&self.mul(a, b))))
    }

    /// Subgroup generated by a set of elements.
    pub fn generate(&self, gens: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut k: Subgroup = BTreeSet::from([0]);
        let gens: Vec<usize> = gens.into_iter().collect();
        let mut frontier: Vec<usize> = vec![0];
        while let Some(a) = frontier.pop() {
            for &g in &gens {
                let p = self.mul(a, g);
                if k.insert(p) {
                    frontier.push(p);
                }
            }
        }
        k
    }

    /// All subgroups, sorted by order and then by elements.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Subgroup> = BTreeSet::from([self.generate([])]);
        let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h.contains(&g) {
                    continue;
                }
                let next = self.generate(h.iter().copied().chain([g]));
                if found.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Right cosets `K·x`, each sorted, listed by smallest element.
    pub fn right_cosets(&self, k: &Subgroup) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut cosets = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            let mut c: Vec<usize> = k.iter().map(|&h| self.mul(h, x)).collect();
            c.sort_unstable();
            for &y in &c {
                seen[y] = true;
            }
            cosets.push(c);
        }
        cosets
    }
}
