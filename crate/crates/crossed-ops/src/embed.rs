//! The embedding of pointed operads into interval sets.
//!
//! A pointed operad `X` yields an interval set with `Ψ(X)_n = X(n)` and the
//! restriction along `φ: ⟪m⟫ → ⟪n⟫` given through the counts of `φ`:
//!
//! ```text
//! φ*(x) = γ(e_3; e_{k_{-∞}}, γ(x; e_{k_1}, …, e_{k_n}), e_{k_∞})
//! ```
//!
//! For a group operad the construction refines to a crossed interval group
//! over the symmetric one (flip bit always 0), and it is strictly monoidal
//! with respect to the semidirect products on both sides.

use crate::crossed::{CrossedGroup, DegreeCache, WreathElem};
use crate::exec::{self, Exec};
use crate::group::FiniteGroup;
use crate::interval::{self, hom_enumerate, IntervalMorphism, SignedPermutation};
use crate::operad::{GroupOperad, Operad, OperadOverSym, PointedOperad, SemidirectOperad};
use crate::perm::Permutation;
use crate::report::{Mode, Report, Violation};
use crate::util::bounded_tuples;
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;
use std::time::Instant;

/// The restriction map of `Ψ(X)` along `φ`, evaluated on one element.
pub fn psi_restrict<P: PointedOperad>(op: &P, phi: &IntervalMorphism, x: &P::Elem) -> P::Elem {
    let n = phi.codomain();
    assert_eq!(op.arity(x), n, "psi_restrict: arity mismatch");
    let counts = phi.counts();
    let inner_inputs: Vec<P::Elem> = (1..=n).map(|j| op.base(counts[j])).collect();
    let inner = op.gamma(x, &inner_inputs);
    op.gamma(
        &op.base(3),
        &[op.base(counts[0]), inner, op.base(counts[n + 1])],
    )
}

/// Checks the base-point equation `γ(e_n; e_{k_1}, …) = e_{Σk}` at all
/// shapes with `n` and the total input degree within the bound; the
/// functoriality of `Ψ` depends on it, and the restriction along any
/// morphism between degrees ≤ bound only exercises such shapes.
pub fn verify_pointedness<P: PointedOperad>(op: &P, bound: usize) -> Report {
    let started = Instant::now();
    let mut violations = Vec::new();
    for n in 0..=bound.max(3) {
        for ks in bounded_tuples(n, bound) {
            let total: usize = ks.iter().sum();
            if total > bound {
                continue;
            }
            let inputs: Vec<P::Elem> = ks.iter().map(|&k| op.base(k)).collect();
            if !op.equal(&op.gamma(&op.base(n), &inputs), &op.base(total)) {
                violations.push(Violation::new(
                    "pointedness",
                    &[n],
                    format!("k⃗={ks:?}"),
                ));
            }
        }
    }
    Report::new(
        format!("pointedness({})", op.name()),
        bound,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// An interval set with finitely enumerable degrees.
pub trait IntervalSet: Send + Sync {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;
    fn elems(&self, n: usize) -> Vec<Self::Elem>;
    fn restrict(&self, phi: &IntervalMorphism, x: &Self::Elem) -> Self::Elem;
}

/// An interval set over the symmetric one.
pub trait IntervalSetOverSym: IntervalSet {
    fn to_sym(&self, n: usize, x: &Self::Elem) -> Permutation;
}

/// `Ψ(X)` as an interval set.
#[derive(Debug, Clone)]
pub struct PsiSet<P>(pub P);

impl<P: PointedOperad> IntervalSet for PsiSet<P> {
    type Elem = P::Elem;

    fn elems(&self, n: usize) -> Vec<P::Elem> {
        self.0.elems(n)
    }

    fn restrict(&self, phi: &IntervalMorphism, x: &P::Elem) -> P::Elem {
        psi_restrict(&self.0, phi, x)
    }
}

impl<P: PointedOperad + OperadOverSym> IntervalSetOverSym for PsiSet<P> {
    fn to_sym(&self, _n: usize, x: &P::Elem) -> Permutation {
        self.0.to_sym(x)
    }
}

/// The constant singleton interval set.
#[derive(Debug, Clone, Default)]
pub struct SingletonSet;

impl IntervalSet for SingletonSet {
    type Elem = ();

    fn elems(&self, _n: usize) -> Vec<()> {
        vec![()]
    }

    fn restrict(&self, _phi: &IntervalMorphism, _x: &()) -> () {}
}

impl IntervalSetOverSym for SingletonSet {
    fn to_sym(&self, n: usize, _x: &()) -> Permutation {
        Permutation::identity(n)
    }
}

/// Semidirect product of interval sets: degreewise products with the
/// twisted restriction `(x, y) ↦ ((φ^{ρ(y)})*(x), φ*(y))`.
#[derive(Debug, Clone)]
pub struct RtimesSet<X, Y> {
    pub left: X,
    pub right: Y,
}

impl<X: IntervalSet, Y: IntervalSetOverSym> RtimesSet<X, Y> {
    pub fn new(left: X, right: Y) -> Self {
        RtimesSet { left, right }
    }
}

impl<X: IntervalSet, Y: IntervalSetOverSym> IntervalSet for RtimesSet<X, Y> {
    type Elem = (X::Elem, Y::Elem);

    fn elems(&self, n: usize) -> Vec<Self::Elem> {
        let mut out = Vec::new();
        for l in self.left.elems(n) {
            for r in self.right.elems(n) {
                out.push((l.clone(), r));
            }
        }
        out
    }

    fn restrict(&self, phi: &IntervalMorphism, x: &Self::Elem) -> Self::Elem {
        let n = phi.codomain();
        let twist = SignedPermutation::new(self.right.to_sym(n, &x.1), false);
        let phi_twisted = interval::act(phi, &twist);
        (
            self.left.restrict(&phi_twisted, &x.0),
            self.right.restrict(phi, &x.1),
        )
    }
}

/// The crossed interval group `Ψ̂(G)` of a group operad: degreewise groups
/// from `G`, restriction through the base points, hom-set action through
/// the structure map with flip bit 0.
pub struct PsiCrossed<G: GroupOperad>
where
    G::Elem: Eq + Hash,
{
    op: G,
    label: String,
    elems: DegreeCache<(Vec<G::Elem>, HashMap<G::Elem, usize>)>,
    tables: DegreeCache<Arc<FiniteGroup>>,
}

/// Builds `Ψ̂(G)`, validating the base-point equation at the given bound.
pub fn psi_crossed<G: GroupOperad>(op: G, bound: usize) -> PsiCrossed<G>
where
    G::Elem: Eq + Hash,
{
    let report = verify_pointedness(&op, bound);
    assert!(
        report.passed(),
        "base points violate the pointedness equation:\n{}",
        report.render_text()
    );
    PsiCrossed {
        label: format!("psi({})", op.name()),
        op,
        elems: DegreeCache::new(),
        tables: DegreeCache::new(),
    }
}

impl<G: GroupOperad> PsiCrossed<G>
where
    G::Elem: Eq + Hash,
{
    pub fn operad(&self) -> &G {
        &self.op
    }

    fn degree(&self, n: usize) -> Arc<(Vec<G::Elem>, HashMap<G::Elem, usize>)> {
        self.elems.get_or_build(n, || {
            let mut elems = self.op.elems(n);
            // the unit sits at index 0 by the crossed-group convention
            let unit_pos = elems
                .iter()
                .position(|e| self.op.equal(e, &self.op.unit(n)))
                .expect("group operad degree without unit");
            elems.swap(0, unit_pos);
            let index = elems
                .iter()
                .enumerate()
                .map(|(i, e)| (e.clone(), i))
                .collect();
            (elems, index)
        })
    }

    pub fn elem(&self, n: usize, x: usize) -> G::Elem {
        self.degree(n).0[x].clone()
    }

    pub fn index_of(&self, n: usize, e: &G::Elem) -> usize {
        self.degree(n).1[e]
    }
}

impl<G: GroupOperad> CrossedGroup for PsiCrossed<G>
where
    G::Elem: Eq + Hash,
{
    fn name(&self) -> String {
        self.label.clone()
    }

    fn group(&self, n: usize) -> Arc<FiniteGroup> {
        let d = self.degree(n);
        self.tables
            .get_or_build(n, || {
                let order = d.0.len();
                let mut mul = vec![0usize; order * order];
                for (a, ea) in d.0.iter().enumerate() {
                    for (b, eb) in d.0.iter().enumerate() {
                        mul[a * order + b] = d.1[&self.op.mul(ea, eb)];
                    }
                }
                Arc::new(FiniteGroup::new(order, mul).expect("group operad degree is a group"))
            })
            .as_ref()
            .clone()
    }

    fn restrict(&self, phi: &IntervalMorphism, x: usize) -> usize {
        let src = self.degree(phi.codomain());
        let dst = self.degree(phi.domain());
        dst.1[&psi_restrict(&self.op, phi, &src.0[x])]
    }

    fn signed_perm(&self, n: usize, x: usize) -> SignedPermutation {
        SignedPermutation::new(self.op.to_sym(&self.degree(n).0[x]), false)
    }

    fn to_weyl(&self, n: usize, x: usize) -> WreathElem {
        WreathElem {
            sigma: self.op.to_sym(&self.degree(n).0[x]),
            letters: vec![0; n],
            u: 0,
        }
    }

    fn order(&self, n: usize) -> usize {
        self.degree(n).0.len()
    }

    fn mul(&self, n: usize, a: usize, b: usize) -> usize {
        let d = self.degree(n);
        d.1[&self.op.mul(&d.0[a], &d.0[b])]
    }

    fn inv(&self, n: usize, a: usize) -> usize {
        let d = self.degree(n);
        d.1[&self.op.inv(&d.0[a])]
    }

    fn describe(&self, n: usize, x: usize) -> String {
        format!("{:?}", self.degree(n).0[x])
    }
}

/// Strict monoidality of the embedding: the interval set of the semidirect
/// product equals the semidirect product of the interval sets, elementwise
/// along every morphism at degrees ≤ `maxdeg`.
pub fn check_strict_monoidality<X, Y>(x_op: &X, y_op: &Y, maxdeg: usize, exec: Exec) -> Report
where
    X: PointedOperad + OperadOverSym + Clone,
    Y: PointedOperad + OperadOverSym + Clone,
{
    let started = Instant::now();
    let product = SemidirectOperad::new(x_op.clone(), y_op.clone());
    let mut units = Vec::new();
    for n in 0..=maxdeg {
        for m in 0..=maxdeg {
            for phi in hom_enumerate(m, n) {
                units.push((n, phi));
            }
        }
    }
    let violations = exec::run_units(exec, units, |(n, phi)| {
        let mut out = Vec::new();
        for x in x_op.elems(*n) {
            for y in y_op.elems(*n) {
                let lhs = psi_restrict(&product, phi, &(x.clone(), y.clone()));
                let twist = SignedPermutation::new(y_op.to_sym(&y), false);
                let rhs = (
                    psi_restrict(x_op, &interval::act(phi, &twist), &x),
                    psi_restrict(y_op, phi, &y),
                );
                if !product.equal(&lhs, &rhs) {
                    out.push(Violation::new(
                        "strict-monoidality",
                        &[phi.domain(), *n],
                        format!("φ={:?}, x={:?}, y={:?}", phi, x, y),
                    ));
                }
            }
        }
        out
    });
    Report::new(
        format!("strict-monoidality({}, {})", x_op.name(), y_op.name()),
        maxdeg,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// Both sides of the rewriting of the operad composition through the
/// interval-set restrictions:
/// `γ(x; x_1, …, x_n)` versus `μ*(x) · ρ_1*(x_1) ⋯ ρ_n*(x_n)`.
pub fn mu_rho_decompose<G: GroupOperad>(
    g: &G,
    x: &G::Elem,
    inputs: &[G::Elem],
) -> (G::Elem, G::Elem) {
    let n = g.arity(x);
    assert_eq!(inputs.len(), n, "mu_rho_decompose: arity mismatch");
    let kvec: Vec<usize> = inputs.iter().map(|e| g.arity(e)).collect();
    let lhs = g.gamma(x, inputs);
    let mut rhs = psi_restrict(g, &interval::mu_of(&kvec), x);
    for (j, xj) in inputs.iter().enumerate() {
        rhs = g.mul(&rhs, &psi_restrict(g, &interval::rho_of(&kvec, j + 1), xj));
    }
    (lhs, rhs)
}

/// Sampled crossed-axiom check for the crossed structure on the braid
/// operad, with equality through the free-group action.
pub fn verify_braid_crossed_sampled(samples: usize, seed: u64, maxdeg: usize) -> Report {
    use crate::braid::{braid_equal, braid_operad, random_word};
    use rand::{Rng, SeedableRng};

    let started = Instant::now();
    let op = braid_operad();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(0..=maxdeg);
        let m = rng.gen_range(0..=maxdeg);
        let l = rng.gen_range(0..=maxdeg);
        let homs_mn = hom_enumerate(m, n);
        let homs_lm = hom_enumerate(l, m);
        let phi = homs_mn[rng.gen_range(0..homs_mn.len())].clone();
        let psi = homs_lm[rng.gen_range(0..homs_lm.len())].clone();
        let x = random_word(n, 3, &mut rng);
        let y = random_word(n, 3, &mut rng);
        let act = |f: &IntervalMorphism, w: &crate::braid::BraidWord| {
            interval::act(
                f,
                &SignedPermutation::new(crate::braid::braid_to_perm(w), false),
            )
        };
        // axiom (i)
        let composed = phi.compose(&psi);
        let lhs = act(&composed, &x);
        let rhs = act(&phi, &x).compose(&act(&psi, &psi_restrict(&op, &phi, &x)));
        if lhs != rhs {
            violations.push(Violation::new(
                "axiom-i",
                &[l, m, n],
                format!("φ={phi:?}, ψ={psi:?}, x={x:?}"),
            ));
        }
        // axiom (ii)
        let lhs = psi_restrict(&op, &phi, &x.concat(&y));
        let rhs = psi_restrict(&op, &act(&phi, &y), &x)
            .concat(&psi_restrict(&op, &phi, &y));
        if !braid_equal(&lhs, &rhs) {
            violations.push(Violation::new(
                "axiom-ii",
                &[m, n],
                format!("φ={phi:?}, x={x:?}, y={y:?}"),
            ));
        }
        // contravariant functoriality
        let lhs = psi_restrict(&op, &psi, &psi_restrict(&op, &phi, &x));
        let rhs = psi_restrict(&op, &composed, &x);
        if !braid_equal(&lhs, &rhs) {
            violations.push(Violation::new(
                "functoriality",
                &[l, m, n],
                format!("φ={phi:?}, ψ={psi:?}, x={x:?}"),
            ));
        }
    }
    Report::new(
        "crossed-axioms(psi(braid), sampled)",
        maxdeg,
        Mode::Sampled,
        violations,
        started,
    )
}

/// Direct truncated enumeration of group-operad endomorphism families of
/// the symmetric operad: degreewise group homomorphisms commuting with the
/// structure map and with all in-bound compositions.
pub fn sym_operad_endomorphisms(maxdeg: usize) -> Vec<Vec<Vec<usize>>> {
    let op = crate::operad::sym_operad();
    let groups: Vec<FiniteGroup> = (0..=maxdeg).map(FiniteGroup::symmetric).collect();
    let perms: Vec<Vec<Permutation>> = (0..=maxdeg).map(Permutation::all).collect();
    // per-degree homomorphism candidates with to_sym ∘ f == to_sym; since
    // the structure map is the identity this pins f degreewise, but the
    // enumeration stays honest and filters the full homomorphism lists
    let mut candidates: Vec<Vec<Vec<usize>>> = Vec::new();
    for n in 0..=maxdeg {
        let homs = groups[n].homs_to(&groups[n]);
        candidates.push(
            homs.into_iter()
                .filter(|f| (0..perms[n].len()).all(|i| perms[n][f[i]] == perms[n][i]))
                .collect(),
        );
    }
    // join degrees and filter by the operad-map property on in-bound shapes
    let mut families: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for cand in candidates {
        let mut next = Vec::new();
        for partial in &families {
            for c in &cand {
                let mut extended = partial.clone();
                extended.push(c.clone());
                next.push(extended);
            }
        }
        families = next;
    }
    families.retain(|fam| {
        for n in 0..=maxdeg {
            for ks in bounded_tuples(n, maxdeg) {
                let total: usize = ks.iter().sum();
                if total > maxdeg {
                    continue;
                }
                for (xi, x) in perms[n].iter().enumerate() {
                    let input_indices: Vec<Vec<usize>> =
                        ks.iter().map(|&k| (0..perms[k].len()).collect()).collect();
                    for tuple in crate::util::product_lists(&input_indices) {
                        let inputs: Vec<Permutation> = tuple
                            .iter()
                            .zip(ks.iter())
                            .map(|(&i, &k)| perms[k][i].clone())
                            .collect();
                        let composed = op.gamma(x, &inputs);
                        let ci = perms[total]
                            .iter()
                            .position(|p| *p == composed)
                            .unwrap();
                        let mapped_inputs: Vec<Permutation> = tuple
                            .iter()
                            .zip(ks.iter())
                            .map(|(&i, &k)| perms[k][fam[k][i]].clone())
                            .collect();
                        let mapped = op.gamma(&perms[n][fam[n][xi]], &mapped_inputs);
                        if perms[total][fam[total][ci]] != mapped {
                            return false;
                        }
                    }
                }
            }
        }
        true
    });
    families
}
