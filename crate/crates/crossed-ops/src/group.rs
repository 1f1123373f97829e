//! Finite groups as explicit multiplication tables.
//!
//! Elements are indices `0..order` with the unit at index 0. The text format
//! consumed by the CLI is a header line `order N` followed by `N` lines of
//! `N` space-separated 0-based indices.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("bad table shape: expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("entry out of range at row {row}, col {col}")]
    Range { row: usize, col: usize },
    #[error("index 0 is not a two-sided unit (fails at {at})")]
    Unit { at: usize },
    #[error("element {elem} has no two-sided inverse")]
    Inverse { elem: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("map is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>, // flat order × order
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table (unit at 0, inverses, associativity via Light's
    /// test on a generating set) and builds the group.
    pub fn new(order: usize, mul: Vec<usize>) -> Result<Self, GroupError> {
        if order == 0 || mul.len() != order * order {
            return Err(GroupError::Shape {
                expected: order * order,
                got: mul.len(),
            });
        }
        for (pos, &v) in mul.iter().enumerate() {
            if v >= order {
                return Err(GroupError::Range {
                    row: pos / order,
                    col: pos % order,
                });
            }
        }
        for a in 0..order {
            if mul[a] != a || mul[a * order] != a {
                return Err(GroupError::Unit { at: a });
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| mul[a * order + b] == 0 && mul[b * order + a] == 0) {
                Some(b) => inv[a] = b,
                None => return Err(GroupError::Inverse { elem: a }),
            }
        }
        let g = FiniteGroup { order, mul, inv };
        g.check_associativity()?;
        Ok(g)
    }

    /// No validation. For negative-control fixtures that intentionally break
    /// the group laws.
    pub fn new_unchecked(order: usize, mul: Vec<usize>) -> Self {
        assert_eq!(mul.len(), order * order);
        let mut inv = vec![0; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| mul[a * order + b] == 0) {
                inv[a] = b;
            }
        }
        FiniteGroup { order, mul, inv }
    }

    /// Light's associativity test: full associativity follows from
    /// `a·(g·c) == (a·g)·c` for `g` ranging over a generating set.
    fn check_associativity(&self) -> Result<(), GroupError> {
        let gens = self.generating_set();
        for &g in &gens {
            for a in 0..self.order {
                for c in 0..self.order {
                    if self.mul(a, self.mul(g, c)) != self.mul(self.mul(a, g), c) {
                        return Err(GroupError::Associativity { a, b: g, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            mul: vec![0],
            inv: vec![0],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = (a + b) % n;
            }
        }
        FiniteGroup::new(n, mul).unwrap()
    }

    /// The symmetric group on `n` letters with elements in the lexicographic
    /// order of `Permutation::all(n)`; the identity is index 0.
    pub fn symmetric(n: usize) -> Self {
        let perms = crate::perm::Permutation::all(n);
        let index: HashMap<_, _> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let order = perms.len();
        let mut mul = vec![0; order * order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                mul[a * order + b] = index[&pa.compose(pb)];
            }
        }
        FiniteGroup::new(order, mul).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn unit(&self) -> usize {
        0
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// Greedy generating set: repeatedly adds the first element outside the
    /// closure of what has been picked so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closed = self.subgroup_closure(&[]);
        while closed.len() < self.order {
            let next = (0..self.order).find(|e| !closed.contains(e)).unwrap();
            gens.push(next);
            closed = self.subgroup_closure(&gens);
        }
        gens
    }

    /// Closure of a set of generators under multiplication and inverses.
    pub fn subgroup_closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(0);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &g in gens {
            if set.insert(g) {
                queue.push_back(g);
            }
        }
        while let Some(a) = queue.pop_front() {
            let i = self.inv(a);
            if set.insert(i) {
                queue.push_back(i);
            }
            let known: Vec<usize> = set.iter().copied().collect();
            for b in known {
                for c in [self.mul(a, b), self.mul(b, a)] {
                    if set.insert(c) {
                        queue.push_back(c);
                    }
                }
            }
        }
        set
    }

    /// Smallest normal subgroup containing `gens`: closure under products,
    /// inverses, and conjugation by all group elements.
    pub fn normal_closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut conjugates: BTreeSet<usize> = BTreeSet::new();
        conjugates.insert(0);
        for &g in gens {
            for a in 0..self.order {
                conjugates.insert(self.mul(self.mul(a, g), self.inv(a)));
            }
        }
        loop {
            let set = self.subgroup_closure(&conjugates.iter().copied().collect::<Vec<_>>());
            let mut grew = false;
            for &g in &set {
                for a in 0..self.order {
                    if conjugates.insert(self.mul(self.mul(a, g), self.inv(a))) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    /// Quotient by a normal subgroup. Returns the quotient group, the
    /// projection (element → coset index), and one representative per coset.
    /// The unit coset gets index 0.
    pub fn quotient(&self, normal: &BTreeSet<usize>) -> (FiniteGroup, Vec<usize>, Vec<usize>) {
        assert!(normal.contains(&0), "normal subgroup must contain the unit");
        let mut proj = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if proj[a] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(a);
            for &k in normal {
                proj[self.mul(a, k)] = idx;
            }
        }
        let q = reps.len();
        let mut mul = vec![0; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * q + j] = proj[self.mul(a, b)];
            }
        }
        let group = FiniteGroup::new(q, mul).expect("quotient by a normal subgroup is a group");
        (group, proj, reps)
    }

    /// All group homomorphisms `self → target`, each as a full image table.
    ///
    /// Enumerates image tuples for a generating set and extends each by
    /// closure, discarding inconsistent choices.
    pub fn homs_to(&self, target: &FiniteGroup) -> Vec<Vec<usize>> {
        let gens = self.generating_set();
        let mut out = Vec::new();
        let mut images = vec![0usize; gens.len()];
        self.homs_rec(target, &gens, &mut images, 0, &mut out);
        out.sort();
        out
    }

    fn homs_rec(
        &self,
        target: &FiniteGroup,
        gens: &[usize],
        images: &mut Vec<usize>,
        pos: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == gens.len() {
            if let Some(map) = self.extend_hom(target, gens, images) {
                out.push(map);
            }
            return;
        }
        for img in 0..target.order {
            images[pos] = img;
            self.homs_rec(target, gens, images, pos + 1, out);
        }
    }

    /// Extends a partial map on generators to a homomorphism, if possible.
    fn extend_hom(
        &self,
        target: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut known = vec![0usize];
        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(0);
        for (&g, &img) in gens.iter().zip(images.iter()) {
            if map[g] == usize::MAX {
                map[g] = img;
                known.push(g);
                queue.push_back(g);
            } else if map[g] != img {
                return None;
            }
        }
        while let Some(a) = queue.pop_front() {
            let snapshot = known.clone();
            for b in snapshot {
                for (x, y) in [(a, b), (b, a)] {
                    let prod = self.mul(x, y);
                    let img = target.mul(map[x], map[y]);
                    if map[prod] == usize::MAX {
                        map[prod] = img;
                        known.push(prod);
                        queue.push_back(prod);
                    } else if map[prod] != img {
                        return None;
                    }
                }
            }
        }
        if known.len() != self.order {
            // generators should generate; defensive against bad input
            return None;
        }
        // final full consistency sweep
        for a in 0..self.order {
            for b in 0..self.order {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Checks that `map` (an index table) is a homomorphism into `target`.
    pub fn check_homomorphism(
        &self,
        target: &FiniteGroup,
        map: &[usize],
    ) -> Result<(), GroupError> {
        for a in 0..self.order {
            for b in 0..self.order {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }

    /// Serializes in the CLI text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("order {}\n", self.order);
        for a in 0..self.order {
            for b in 0..self.order {
                if b > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{}", self.mul(a, b));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the CLI text format and validates the table.
    pub fn from_text(text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GroupError::Parse("empty input".into()))?;
        let order: usize = header
            .trim()
            .strip_prefix("order")
            .ok_or_else(|| GroupError::Parse("expected `order N` header".into()))?
            .trim()
            .parse()
            .map_err(|e| GroupError::Parse(format!("bad order: {e}")))?;
        let mut mul = Vec::with_capacity(order * order);
        for _ in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| GroupError::Parse("truncated table".into()))?;
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|e| GroupError::Parse(format!("bad entry {tok}: {e}")))?;
                mul.push(v);
            }
        }
        FiniteGroup::new(order, mul)
    }
}
