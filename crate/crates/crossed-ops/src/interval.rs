//! The category of intervals.
//!
//! Objects are the linearly ordered sets `⟪n⟫ = {-∞, 1, …, n, ∞}`; morphisms
//! are order-preserving, endpoint-preserving maps. A morphism
//! `φ: ⟪m⟫ → ⟪n⟫` is stored as its count vector
//! `(k_{-∞}, k_1, …, k_n, k_∞)`: `k_j` is the number of *interior* points of
//! `⟪m⟫` in the fiber over `j`. The counts sum to `m` and determine `φ`
//! uniquely, which gives O(1) equality. The map form is always derived,
//! never stored.
//!
//! The augmented simplex subcategory consists of the morphisms whose only
//! preimages of `±∞` are `±∞` themselves, i.e. the active ones.

use crate::perm::Permutation;
use std::fmt;

/// A point of `⟪n⟫`. `Int` is 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    NegInf,
    Int(usize),
    PosInf,
}

/// A pair `(σ; ε)` in `S_n × Z/2Z`, acting on hom-sets of the interval
/// category: `σ` permutes interior counts and `ε` swaps the counts at `±∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: Permutation,
    pub flip: bool,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: Permutation::identity(n),
            flip: false,
        }
    }

    pub fn new(perm: Permutation, flip: bool) -> Self {
        SignedPermutation { perm, flip }
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && !self.flip
    }

    /// Product in `S_n × Z/2Z`.
    pub fn mul(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            perm: self.perm.compose(&other.perm),
            flip: self.flip ^ other.flip,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalMorphism {
    counts: Vec<usize>, // length codomain + 2
}

impl fmt::Debug for IntervalMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟪{}⟫→⟪{}⟫{:?}",
            self.domain(),
            self.codomain(),
            self.counts
        )
    }
}

impl IntervalMorphism {
    /// Builds a morphism from its count vector; the codomain is
    /// `counts.len() - 2` and the domain is the sum of the counts.
    pub fn from_counts(counts: Vec<usize>) -> Self {
        assert!(counts.len() >= 2, "count vector needs at least 2 entries");
        IntervalMorphism { counts }
    }

    pub fn identity(n: usize) -> Self {
        let mut counts = vec![0; n + 2];
        for c in counts.iter_mut().take(n + 1).skip(1) {
            *c = 1;
        }
        IntervalMorphism { counts }
    }

    pub fn domain(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn codomain(&self) -> usize {
        self.counts.len() - 2
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count_neg_inf(&self) -> usize {
        self.counts[0]
    }

    pub fn count_pos_inf(&self) -> usize {
        *self.counts.last().unwrap()
    }

    /// Count of the interior fiber over `j` (1-indexed).
    pub fn count_interior(&self, j: usize) -> usize {
        self.counts[j]
    }

    /// Evaluates the morphism at a point of `⟪m⟫`.
    pub fn evaluate(&self, p: Point) -> Point {
        match p {
            Point::NegInf => Point::NegInf,
            Point::PosInf => Point::PosInf,
            Point::Int(i) => {
                let m = self.domain();
                assert!(i >= 1 && i <= m, "point {i} out of range 1..={m}");
                let n = self.codomain();
                let mut upper = self.counts[0];
                if i <= upper {
                    return Point::NegInf;
                }
                for j in 1..=n {
                    upper += self.counts[j];
                    if i <= upper {
                        return Point::Int(j);
                    }
                }
                Point::PosInf
            }
        }
    }

    /// Images of the interior points `1, …, m` in order.
    pub fn interior_images(&self) -> Vec<Point> {
        let n = self.codomain();
        let mut out = Vec::with_capacity(self.domain());
        for _ in 0..self.counts[0] {
            out.push(Point::NegInf);
        }
        for j in 1..=n {
            for _ in 0..self.counts[j] {
                out.push(Point::Int(j));
            }
        }
        for _ in 0..self.counts[n + 1] {
            out.push(Point::PosInf);
        }
        out
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &IntervalMorphism) -> IntervalMorphism {
        assert_eq!(
            other.codomain(),
            self.domain(),
            "compose: ⟪{}⟫→⟪{}⟫ after ⟪{}⟫→⟪{}⟫",
            self.domain(),
            self.codomain(),
            other.domain(),
            other.codomain()
        );
        let n = self.codomain();
        let mut counts = vec![0usize; n + 2];
        // domain points that other already sends to ±∞ stay there
        counts[0] = other.counts[0];
        counts[n + 1] = other.count_pos_inf();
        // each interior point j of the middle object carries its fiber of
        // other to self's image of j
        for j in 1..=other.codomain() {
            let target = self.evaluate(Point::Int(j));
            let c = other.counts[j];
            match target {
                Point::NegInf => counts[0] += c,
                Point::PosInf => counts[n + 1] += c,
                Point::Int(t) => counts[t] += c,
            }
        }
        IntervalMorphism { counts }
    }

    /// Active: only `±∞` map to `±∞`.
    pub fn is_active(&self) -> bool {
        self.counts[0] == 0 && self.count_pos_inf() == 0
    }

    /// Inert: the restriction to interior preimages of interior points is a
    /// bijection, i.e. every interior fiber is a singleton.
    pub fn is_inert(&self) -> bool {
        let n = self.codomain();
        (1..=n).all(|j| self.counts[j] == 1)
    }

    /// Membership in the augmented simplex subcategory.
    pub fn is_augmented_simplicial(&self) -> bool {
        self.is_active()
    }
}

/// Enumerates all morphisms `⟪m⟫ → ⟪n⟫`, i.e. all `(n+2)`-part weak
/// compositions of `m`. Their number is `binomial(m + n + 1, n + 1)`.
pub fn hom_enumerate(m: usize, n: usize) -> Vec<IntervalMorphism> {
    let parts = n + 2;
    let mut out = Vec::new();
    let mut current = vec![0usize; parts];
    fn rec(current: &mut Vec<usize>, idx: usize, rest: usize, out: &mut Vec<IntervalMorphism>) {
        if idx == current.len() - 1 {
            current[idx] = rest;
            out.push(IntervalMorphism::from_counts(current.clone()));
            return;
        }
        for v in 0..=rest {
            current[idx] = v;
            rec(current, idx + 1, rest - v, out);
        }
    }
    rec(&mut current, 0, m, &mut out);
    out
}

/// Left action of `S_n × Z/2Z` on `hom(⟪m⟫, ⟪n⟫)`: interior counts are
/// permuted through `σ⁻¹` and the `±∞` counts are swapped when the flip bit
/// is set.
pub fn act(phi: &IntervalMorphism, g: &SignedPermutation) -> IntervalMorphism {
    let n = phi.codomain();
    assert_eq!(g.degree(), n, "act: degree mismatch");
    let mut counts = vec![0usize; n + 2];
    if g.flip {
        counts[0] = phi.count_pos_inf();
        counts[n + 1] = phi.count_neg_inf();
    } else {
        counts[0] = phi.count_neg_inf();
        counts[n + 1] = phi.count_pos_inf();
    }
    let inv = g.perm.inverse();
    for j in 1..=n {
        counts[j] = phi.counts[inv.apply(j)];
    }
    IntervalMorphism { counts }
}

/// Unique factorization `φ = μ ∘ ρ` with `ρ` inert and `μ` active.
pub fn inert_active_factorize(phi: &IntervalMorphism) -> (IntervalMorphism, IntervalMorphism) {
    let n = phi.codomain();
    let interior: usize = (1..=n).map(|j| phi.counts[j]).sum();
    let mut rho_counts = vec![1usize; interior + 2];
    rho_counts[0] = phi.count_neg_inf();
    rho_counts[interior + 1] = phi.count_pos_inf();
    let rho = IntervalMorphism::from_counts(rho_counts);
    let mut mu_counts = vec![0usize; n + 2];
    for j in 1..=n {
        mu_counts[j] = phi.counts[j];
    }
    let mu = IntervalMorphism::from_counts(mu_counts);
    (rho, mu)
}

/// The unique section of an inert morphism.
///
/// Panics if `rho` is not inert.
pub fn inert_section(rho: &IntervalMorphism) -> IntervalMorphism {
    assert!(rho.is_inert(), "inert_section: morphism is not inert");
    let k = rho.codomain();
    let n = rho.domain();
    // the section sends j to its unique interior preimage k_{-∞} + j
    let mut counts = vec![0usize; n + 2];
    for j in 1..=k {
        counts[rho.count_neg_inf() + j] = 1;
    }
    IntervalMorphism::from_counts(counts)
}

/// Dissociated pair: every interior point of the common domain is sent to
/// `±∞` by at least one of the two morphisms.
pub fn dissociated(phi1: &IntervalMorphism, phi2: &IntervalMorphism) -> bool {
    assert_eq!(phi1.domain(), phi2.domain(), "dissociated: domain mismatch");
    let im1 = phi1.interior_images();
    let im2 = phi2.interior_images();
    im1.iter()
        .zip(im2.iter())
        .all(|(a, b)| !matches!(a, Point::Int(_)) || !matches!(b, Point::Int(_)))
}

/// The unique active morphism `⟪k_1 + ⋯ + k_n⟫ → ⟪n⟫` with interior fiber
/// sizes `k_1, …, k_n`.
pub fn mu_of(kvec: &[usize]) -> IntervalMorphism {
    let mut counts = vec![0usize; kvec.len() + 2];
    counts[1..=kvec.len()].copy_from_slice(kvec);
    IntervalMorphism::from_counts(counts)
}

/// The inert morphism `⟪k_1 + ⋯ + k_n⟫ → ⟪k_j⟫` collapsing everything before
/// the `j`-th block to `-∞` and everything after it to `∞`.
pub fn rho_of(kvec: &[usize], j: usize) -> IntervalMorphism {
    assert!(j >= 1 && j <= kvec.len(), "rho_of: block index out of range");
    let before: usize = kvec[..j - 1].iter().sum();
    let after: usize = kvec[j..].iter().sum();
    let kj = kvec[j - 1];
    let mut counts = vec![1usize; kj + 2];
    counts[0] = before;
    counts[kj + 1] = after;
    IntervalMorphism::from_counts(counts)
}

/// Join of two augmented-simplicial morphisms: interior counts are
/// concatenated.
///
/// Panics unless both inputs are augmented-simplicial.
pub fn join(phi1: &IntervalMorphism, phi2: &IntervalMorphism) -> IntervalMorphism {
    assert!(
        phi1.is_augmented_simplicial() && phi2.is_augmented_simplicial(),
        "join requires augmented-simplicial morphisms"
    );
    let n1 = phi1.codomain();
    let n2 = phi2.codomain();
    let mut counts = vec![0usize; n1 + n2 + 2];
    for j in 1..=n1 {
        counts[j] = phi1.counts[j];
    }
    for j in 1..=n2 {
        counts[n1 + j] = phi2.counts[j];
    }
    IntervalMorphism::from_counts(counts)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_signed(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for p in Permutation::all(n) {
            for flip in [false, true] {
                out.push(SignedPermutation::new(p.clone(), flip));
            }
        }
        out
    }

    #[test]
    fn evaluate_examples() {
        let id1 = IntervalMorphism::from_counts(vec![0, 1, 0]);
        assert_eq!(id1.evaluate(Point::Int(1)), Point::Int(1));
        let to0 = IntervalMorphism::from_counts(vec![1, 0]);
        assert_eq!(to0.evaluate(Point::Int(1)), Point::NegInf);
        let phi = IntervalMorphism::from_counts(vec![0, 2, 1, 0]);
        assert_eq!(phi.evaluate(Point::Int(3)), Point::Int(2));
        assert_eq!(phi.evaluate(Point::Int(1)), Point::Int(1));
        assert_eq!(phi.evaluate(Point::NegInf), Point::NegInf);
        assert_eq!(phi.evaluate(Point::PosInf), Point::PosInf);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn evaluate_out_of_range() {
        let id1 = IntervalMorphism::identity(1);
        let _ = id1.evaluate(Point::Int(2));
    }

    #[test]
    fn compose_identities() {
        for m in 0..=3 {
            for n in 0..=3 {
                for phi in hom_enumerate(m, n) {
                    assert_eq!(IntervalMorphism::identity(n).compose(&phi), phi);
                    assert_eq!(phi.compose(&IntervalMorphism::identity(m)), phi);
                }
            }
        }
    }

    #[test]
    fn compose_matches_pointwise_and_is_associative() {
        for l in 0..=3 {
            for m in 0..=3 {
                for n in 0..=3 {
                    for phi in hom_enumerate(m, n) {
                        for psi in hom_enumerate(l, m) {
                            let comp = phi.compose(&psi);
                            for i in 1..=l {
                                assert_eq!(
                                    comp.evaluate(Point::Int(i)),
                                    phi.evaluate(psi.evaluate(Point::Int(i)))
                                );
                            }
                            // associativity against a third morphism
                            for chi in hom_enumerate(1, l) {
                                assert_eq!(
                                    comp.compose(&chi),
                                    phi.compose(&psi.compose(&chi))
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "compose")]
    fn compose_mismatch() {
        let phi = IntervalMorphism::identity(2);
        let psi = IntervalMorphism::identity(3);
        let _ = phi.compose(&psi);
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom_enumerate(0, 0).len(), 1);
        assert_eq!(hom_enumerate(2, 1).len(), 6);
        for n in 0..=5 {
            assert_eq!(hom_enumerate(1, n).len(), n + 2);
        }
        for m in 0..=5 {
            for n in 0..=5 {
                let homs = hom_enumerate(m, n);
                assert_eq!(homs.len(), binomial(m + n + 1, n + 1));
                // each exactly once
                let mut sorted = homs.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), homs.len());
                for h in &homs {
                    assert_eq!(h.domain(), m);
                    assert_eq!(h.codomain(), n);
                }
            }
        }
    }

    #[test]
    fn act_examples() {
        for m in 0..=3 {
            for n in 0..=3 {
                for phi in hom_enumerate(m, n) {
                    assert_eq!(act(&phi, &SignedPermutation::identity(n)), phi);
                }
            }
        }
        // on ⟪n⟫ = hom(⟪1⟫, ⟪n⟫): (σ; ε) sends j ↦ σ(j), ±∞ ↦ ±(-1)^ε ∞
        let n = 3;
        for g in all_signed(n) {
            for j in 1..=n {
                let mut counts = vec![0; n + 2];
                counts[j] = 1;
                let phi = IntervalMorphism::from_counts(counts);
                let acted = act(&phi, &g);
                assert_eq!(
                    acted.evaluate(Point::Int(1)),
                    Point::Int(g.perm.apply(j))
                );
            }
            for (src, counts) in [
                (Point::NegInf, {
                    let mut c = vec![0; n + 2];
                    c[0] = 1;
                    c
                }),
                (Point::PosInf, {
                    let mut c = vec![0; n + 2];
                    c[n + 1] = 1;
                    c
                }),
            ] {
                let phi = IntervalMorphism::from_counts(counts);
                let acted = act(&phi, &g);
                let expect = match (src, g.flip) {
                    (Point::NegInf, false) | (Point::PosInf, true) => Point::NegInf,
                    _ => Point::PosInf,
                };
                assert_eq!(acted.evaluate(Point::Int(1)), expect);
            }
        }
    }

    /// act is a left action: φ^{gh} == (φ^h)^g, exhaustively for m, n ≤ 3.
    #[test]
    fn act_is_left_action() {
        for m in 0..=3 {
            for n in 0..=3 {
                let gs = all_signed(n);
                for phi in hom_enumerate(m, n) {
                    for g in &gs {
                        for h in &gs {
                            assert_eq!(act(&act(&phi, h), g), act(&phi, &g.mul(h)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn active_inert_predicates() {
        let id = IntervalMorphism::identity(2);
        assert!(id.is_active() && id.is_inert());
        let phi = IntervalMorphism::from_counts(vec![0, 2, 0]);
        assert!(phi.is_active() && !phi.is_inert());
        let psi = IntervalMorphism::from_counts(vec![1, 1, 0]);
        assert!(!psi.is_active() && psi.is_inert());
        assert!(phi.is_augmented_simplicial());
        assert!(!psi.is_augmented_simplicial());
    }

    /// Unique inert-active factorization for every φ with m, n ≤ 4: the
    /// factorization composes back to φ, and an exhaustive search over all
    /// (ρ, μ) pairs finds exactly one.
    #[test]
    fn factorization_unique() {
        for m in 0..=4usize {
            for n in 0..=4usize {
                for phi in hom_enumerate(m, n) {
                    let (rho, mu) = inert_active_factorize(&phi);
                    assert!(rho.is_inert());
                    assert!(mu.is_active());
                    assert_eq!(mu.compose(&rho), phi);
                    if phi.is_inert() {
                        assert_eq!(rho, phi);
                    }
                    if phi.is_active() {
                        assert_eq!(mu, phi);
                    }
                    let mut found = 0;
                    for mid in 0..=m {
                        for r in hom_enumerate(m, mid).iter().filter(|r| r.is_inert()) {
                            for u in hom_enumerate(mid, n).iter().filter(|u| u.is_active()) {
                                if u.compose(r) == phi {
                                    found += 1;
                                }
                            }
                        }
                    }
                    assert_eq!(found, 1, "non-unique factorization for {phi:?}");
                }
            }
        }
    }

    /// Sections of inert morphisms exist, satisfy ρ∘δ = id, and are unique
    /// at degrees ≤ 4.
    #[test]
    fn inert_sections() {
        assert_eq!(
            inert_section(&IntervalMorphism::identity(2)),
            IntervalMorphism::identity(2)
        );
        let rho = IntervalMorphism::from_counts(vec![1, 1, 0]);
        let delta = inert_section(&rho);
        assert_eq!(delta.evaluate(Point::Int(1)), Point::Int(2));
        for m in 0..=4 {
            for n in 0..=4 {
                for rho in hom_enumerate(m, n).iter().filter(|r| r.is_inert()) {
                    let delta = inert_section(rho);
                    assert_eq!(rho.compose(&delta), IntervalMorphism::identity(n));
                    let sections: Vec<_> = hom_enumerate(n, m)
                        .into_iter()
                        .filter(|d| rho.compose(d) == IntervalMorphism::identity(n))
                        .collect();
                    assert_eq!(sections, vec![delta]);
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "not inert")]
    fn inert_section_rejects_non_inert() {
        let _ = inert_section(&IntervalMorphism::from_counts(vec![0, 2, 0]));
    }

    #[test]
    fn dissociated_examples() {
        let to0 = IntervalMorphism::from_counts(vec![1, 0]); // ⟪1⟫ → ⟪0⟫
        let id1 = IntervalMorphism::identity(1);
        assert!(dissociated(&to0, &id1));
        assert!(dissociated(&to0, &to0));
        assert!(!dissociated(&id1, &id1));
    }

    /// Dissociation only depends on the inert parts, and is stable under
    /// precomposition — both exhaustively at degrees ≤ 3.
    #[test]
    fn dissociated_factorization_and_precomposition() {
        for m in 0..=3usize {
            for k1 in 0..=3usize {
                for k2 in 0..=3usize {
                    for phi1 in hom_enumerate(m, k1) {
                        for phi2 in hom_enumerate(m, k2) {
                            let d = dissociated(&phi1, &phi2);
                            let (r1, _) = inert_active_factorize(&phi1);
                            let (r2, _) = inert_active_factorize(&phi2);
                            assert_eq!(d, dissociated(&r1, &r2));
                            if d {
                                for l in 0..=3usize {
                                    for psi in hom_enumerate(l, m) {
                                        assert!(dissociated(
                                            &phi1.compose(&psi),
                                            &phi2.compose(&psi)
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mu_rho_constructions() {
        assert_eq!(mu_of(&[1, 1]), IntervalMorphism::identity(2));
        assert_eq!(
            rho_of(&[2, 1], 1),
            IntervalMorphism::from_counts(vec![0, 1, 1, 1])
        );
        // ρ_j composed with its section is the identity, small degrees
        for kvec in [vec![1, 2], vec![2, 1], vec![0, 2, 1], vec![1, 1, 1]] {
            for j in 1..=kvec.len() {
                let rho = rho_of(&kvec, j);
                assert!(rho.is_inert());
                let delta = inert_section(&rho);
                assert_eq!(
                    rho.compose(&delta),
                    IntervalMorphism::identity(kvec[j - 1])
                );
            }
            let mu = mu_of(&kvec);
            assert!(mu.is_active());
            assert_eq!(mu.domain(), kvec.iter().sum::<usize>());
        }
    }

    #[test]
    fn join_examples() {
        for m in 0..=3 {
            for n in 0..=3 {
                assert_eq!(
                    join(
                        &IntervalMorphism::identity(m),
                        &IntervalMorphism::identity(n)
                    ),
                    IntervalMorphism::identity(m + n)
                );
            }
        }
        assert_eq!(join(&mu_of(&[2]), &mu_of(&[1])), mu_of(&[2, 1]));
        // associativity at degrees ≤ 3
        let actives = |m: usize, n: usize| -> Vec<IntervalMorphism> {
            hom_enumerate(m, n)
                .into_iter()
                .filter(|f| f.is_active())
                .collect()
        };
        for a in actives(2, 1) {
            for b in actives(1, 1) {
                for c in actives(3, 2) {
                    assert_eq!(join(&join(&a, &b), &c), join(&a, &join(&b, &c)));
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "augmented-simplicial")]
    fn join_rejects_non_simplicial() {
        let psi = IntervalMorphism::from_counts(vec![1, 1, 0]);
        let _ = join(&psi, &IntervalMorphism::identity(1));
    }
}
