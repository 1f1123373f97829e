//! The paracyclic category and its self-duality.
//!
//! A morphism `(m) → (n)` is an order-preserving map `f: Z → Z` with
//! `f(i + m + 1) = f(i) + n + 1`, stored by its values on `0, …, m`. The
//! dual sends `f` to `f̄(j) = min{ i | j ≤ f(i) }`, contravariantly.
//!
//! Every morphism factors uniquely as a simplex-category part after a power
//! of the degree rotation; `simplicial_dual_pair` computes that factorization
//! for the dual of a simplex morphism in closed form, and the Hochschild
//! faces are built from it.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParacyclicMorphism {
    domain: usize,   // paracyclic degree m
    codomain: usize, // paracyclic degree n
    values: Vec<i64>,
}

impl fmt::Debug for ParacyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})→({}){:?}",
            self.domain, self.codomain, self.values
        )
    }
}

impl ParacyclicMorphism {
    /// Builds a morphism from `f(0), …, f(m)`; the equivariant extension
    /// must be order-preserving, i.e. the values are nondecreasing and
    /// `f(m) ≤ f(0) + n + 1`.
    pub fn new(domain: usize, codomain: usize, values: Vec<i64>) -> Self {
        assert_eq!(values.len(), domain + 1, "need values on 0..=m");
        for w in values.windows(2) {
            assert!(w[0] <= w[1], "values must be nondecreasing: {values:?}");
        }
        assert!(
            *values.last().unwrap() <= values[0] + codomain as i64 + 1,
            "extension not order-preserving: {values:?} into degree {codomain}"
        );
        ParacyclicMorphism {
            domain,
            codomain,
            values,
        }
    }

    pub fn identity(n: usize) -> Self {
        ParacyclicMorphism::new(n, n, (0..=n as i64).collect())
    }

    /// The degree-`n` rotation `τ_n: i ↦ i + 1`.
    pub fn tau(n: usize) -> Self {
        ParacyclicMorphism::new(n, n, (1..=n as i64 + 1).collect())
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Evaluation at any integer through equivariance.
    pub fn eval(&self, i: i64) -> i64 {
        let period = self.domain as i64 + 1;
        let q = i.div_euclid(period);
        let r = i.rem_euclid(period) as usize;
        self.values[r] + q * (self.codomain as i64 + 1)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &ParacyclicMorphism) -> ParacyclicMorphism {
        assert_eq!(
            other.codomain, self.domain,
            "paracyclic composition mismatch"
        );
        let values = (0..=other.domain as i64)
            .map(|i| self.eval(other.eval(i)))
            .collect();
        ParacyclicMorphism::new(other.domain, self.codomain, values)
    }

    /// The dual `f̄(j) = min{ i | j ≤ f(i) }`, a morphism `(n) → (m)`.
    pub fn dual(&self) -> ParacyclicMorphism {
        let values = (0..=self.codomain as i64)
            .map(|j| {
                // scan from a lower bound guaranteed to be below the answer
                let period = self.domain as i64 + 1;
                let mut i = {
                    // f(i) grows by n+1 per period; start far enough left
                    let mut lo = 0i64;
                    while self.eval(lo) >= j {
                        lo -= period;
                    }
                    lo
                };
                while self.eval(i) < j {
                    i += 1;
                }
                i
            })
            .collect();
        ParacyclicMorphism::new(self.codomain, self.domain, values)
    }

    /// Membership in the simplex part: all values within `0..=n`.
    pub fn is_simplicial(&self) -> bool {
        self.values[0] >= 0 && *self.values.last().unwrap() <= self.codomain as i64
    }

    /// The unique factorization `f = φ ∘ τ^c` with `φ` simplicial: returns
    /// `(φ, c)`.
    pub fn delta_factorize(&self) -> (ParacyclicMorphism, i64) {
        // c is fixed by requiring φ(0) = f(-c) ≥ 0 > f(-c - 1)
        let mut c = 0i64;
        while self.eval(-c) < 0 {
            c -= 1;
        }
        while self.eval(-c - 1) >= 0 {
            c += 1;
        }
        let values = (0..=self.domain as i64).map(|i| self.eval(i - c)).collect();
        (
            ParacyclicMorphism::new(self.domain, self.codomain, values),
            c,
        )
    }
}

/// All morphisms `(m) → (n)` with `f(0)` in a canonical representative
/// window `-(n+1) ..= n+1` (test enumeration helper).
pub fn enumerate_window(m: usize, n: usize) -> Vec<ParacyclicMorphism> {
    let mut out = Vec::new();
    let period = n as i64 + 1;
    let mut values = vec![0i64; m + 1];
    fn rec(
        values: &mut Vec<i64>,
        pos: usize,
        min: i64,
        max: i64,
        out: &mut Vec<ParacyclicMorphism>,
        m: usize,
        n: usize,
    ) {
        if pos == values.len() {
            out.push(ParacyclicMorphism::new(m, n, values.clone()));
            return;
        }
        for v in min..=max {
            values[pos] = v;
            let cap = if pos == 0 { values[0] + n as i64 + 1 } else { max };
            rec(values, pos + 1, v, cap, out, m, n);
        }
    }
    for start in -period..=period {
        values[0] = start;
        let cap = start + period;
        rec(&mut values, 1, start, cap, &mut out, m, n);
    }
    out
}

/// The dual of a simplex-category morphism `φ: [m] → [n]`, presented as the
/// widths of its join-of-point-collapses part and the rotation power:
/// the part `[n] → [m]` has fiber sizes
/// `(φ(0) + n − φ(m) + 1, φ(1) − φ(0), …, φ(m) − φ(m−1))` and the rotation
/// power is `n − φ(m)`.
pub fn simplicial_dual_pair(phi: &[usize], n: usize) -> (Vec<usize>, usize) {
    assert!(!phi.is_empty(), "need a morphism out of a nonempty ordinal");
    for w in phi.windows(2) {
        assert!(w[0] <= w[1], "not order-preserving: {phi:?}");
    }
    let m = phi.len() - 1;
    assert!(phi[m] <= n, "value out of range: {phi:?} into [{n}]");
    let mut widths = Vec::with_capacity(m + 1);
    widths.push(phi[0] + n - phi[m] + 1);
    for j in 1..=m {
        widths.push(phi[j] - phi[j - 1]);
    }
    (widths, n - phi[m])
}

/// The map `{0, …, n} → {0, …, m}` obtained by evaluating a dual pair:
/// rotate by the power, then collapse blocks by the widths.
pub fn evaluate_dual_pair(widths: &[usize], power: usize, j: usize) -> usize {
    let total: usize = widths.iter().sum();
    let rotated = (j + power) % total;
    let mut acc = 0;
    for (block, &w) in widths.iter().enumerate() {
        acc += w;
        if rotated < acc {
            return block;
        }
    }
    unreachable!("widths exhausted")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_equivariance() {
        let f = ParacyclicMorphism::new(1, 2, vec![0, 2]);
        assert_eq!(f.eval(0), 0);
        assert_eq!(f.eval(1), 2);
        assert_eq!(f.eval(2), 3);
        assert_eq!(f.eval(-1), -1);
        assert_eq!(f.eval(-2), -3);
    }

    #[test]
    fn dual_examples() {
        // the identity is self-dual
        for n in 0..=3 {
            assert_eq!(
                ParacyclicMorphism::identity(n).dual(),
                ParacyclicMorphism::identity(n)
            );
        }
        // f ∈ hom((0), (0)), f(i) = i + 1 has dual f̄(i) = i - 1
        let f = ParacyclicMorphism::new(0, 0, vec![1]);
        assert_eq!(f.dual().values(), &[-1]);
    }

    /// Contravariant functoriality of the dual on all composable pairs with
    /// degrees ≤ 2 over the representative window.
    #[test]
    fn dual_contravariant() {
        for m in 0..=2usize {
            for n in 0..=2usize {
                for l in 0..=2usize {
                    for f in enumerate_window(m, n) {
                        for g in enumerate_window(l, m) {
                            let fg = f.compose(&g);
                            assert_eq!(
                                fg.dual(),
                                g.dual().compose(&f.dual()),
                                "f={f:?}, g={g:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_is_involutive_on_window() {
        for m in 0..=2usize {
            for n in 0..=2usize {
                for f in enumerate_window(m, n) {
                    assert_eq!(f.dual().dual(), f);
                }
            }
        }
    }

    #[test]
    fn delta_factorization_unique() {
        for m in 0..=2usize {
            for n in 0..=2usize {
                for f in enumerate_window(m, n) {
                    let (phi, c) = f.delta_factorize();
                    assert!(phi.is_simplicial());
                    // f == φ ∘ τ^c
                    for i in 0..=(m as i64) {
                        assert_eq!(f.eval(i), phi.eval(i + c));
                    }
                    // uniqueness: any simplicial φ' with f = φ'∘τ^{c'} has
                    // (φ', c') == (φ, c)
                    for c2 in -(n as i64 + 1)..=(n as i64 + 1) {
                        if c2 == c {
                            continue;
                        }
                        let values: Vec<i64> =
                            (0..=m as i64).map(|i| f.eval(i - c2)).collect();
                        if values[0] >= 0 && values[m] <= n as i64 {
                            panic!("second simplicial factorization of {f:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_pair_formula_examples() {
        // identity pair: widths all 1, no rotation
        let (w, c) = simplicial_dual_pair(&[0, 1, 2], 2);
        assert_eq!(w, vec![1, 1, 1]);
        assert_eq!(c, 0);
        // φ: [1] → [2], 0 ↦ 0, 1 ↦ 2
        let (w, c) = simplicial_dual_pair(&[0, 2], 2);
        assert_eq!(w, vec![1, 2]);
        assert_eq!(c, 0);
        // φ: [0] → [1], 0 ↦ 0
        let (w, c) = simplicial_dual_pair(&[0], 1);
        assert_eq!(w, vec![2]);
        assert_eq!(c, 1);
    }

    /// The dual pair reproduces the fibers of the dual morphism reduced mod
    /// the domain period, for all simplex morphisms with m, n ≤ 3.
    #[test]
    fn dual_pair_matches_min_formula() {
        fn simplex_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = vec![0usize; m + 1];
            loop {
                if cur.windows(2).all(|w| w[0] <= w[1]) {
                    out.push(cur.clone());
                }
                let mut pos = m + 1;
                loop {
                    if pos == 0 {
                        return out;
                    }
                    pos -= 1;
                    cur[pos] += 1;
                    if cur[pos] <= n {
                        break;
                    }
                    cur[pos] = 0;
                }
            }
        }
        for m in 0..=3usize {
            for n in 0..=3usize {
                for phi in simplex_maps(m, n) {
                    let f = ParacyclicMorphism::new(
                        m,
                        n,
                        phi.iter().map(|&v| v as i64).collect(),
                    );
                    let dual = f.dual();
                    let (widths, power) = simplicial_dual_pair(&phi, n);
                    assert_eq!(widths.iter().sum::<usize>(), n + 1);
                    assert_eq!(widths.len(), m + 1);
                    // pointwise: reduced dual == evaluated pair
                    for j in 0..=n {
                        let reduced =
                            dual.eval(j as i64).rem_euclid(m as i64 + 1) as usize;
                        assert_eq!(
                            evaluate_dual_pair(&widths, power, j),
                            reduced,
                            "φ={phi:?}, j={j}"
                        );
                    }
                    // and the widths agree with the factorization of the dual
                    let (delta_part, c) = dual.delta_factorize();
                    assert_eq!(c, power as i64);
                    let mut fiber_sizes = vec![0usize; m + 1];
                    for j in 0..=n as i64 {
                        fiber_sizes[delta_part.eval(j) as usize] += 1;
                    }
                    assert_eq!(fiber_sizes, widths);
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "nondecreasing")]
    fn rejects_non_monotone() {
        let _ = ParacyclicMorphism::new(1, 1, vec![1, 0]);
    }

    #[test]
    #[should_panic(expected = "not order-preserving")]
    fn rejects_overwide() {
        let _ = ParacyclicMorphism::new(1, 0, vec![0, 2]);
    }
}
