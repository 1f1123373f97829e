//! Crossed interval groups.
//!
//! A crossed interval group is a presheaf of finite groups on the interval
//! category together with a left action on hom-sets, subject to
//!
//! - axiom (i): `(φψ)^x == φ^x ∘ ψ^{φ*(x)}`,
//! - axiom (ii): `φ*(xy) == (φ^y)*(x) · φ*(y)`.
//!
//! Every instance here also carries its structure map to the terminal
//! crossed interval group `W(Z/2, Z/2)` as explicit data: terminality is a
//! theorem, not an algorithm, so the map is provided rather than inferred.
//!
//! The module implements the wreath construction `W(H0, H1)` together with
//! the named instances (symmetric, hyperoctahedral, Weyl), the
//! order-reversing constant presheaf, constant crossed groups with trivial
//! action, total-category composition, exhaustive axiom verification, and
//! truncated enumeration of crossed-group maps.

use crate::group::{FiniteGroup, GroupError};
use crate::interval::{self, hom_enumerate, IntervalMorphism, Point, SignedPermutation};
use crate::perm::{beta_pow, gamma_sym, Permutation};
use crate::report::{Mode, Report, Violation};
use crate::{exec, exec::Exec};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use std::time::Instant;

/// An element of a wreath-constructed group `(S_n ⋉ H1^n) × H0`, stored
/// structurally so failure witnesses stay readable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElem {
    pub sigma: Permutation,
    pub letters: Vec<usize>,
    pub u: usize,
}

impl WreathElem {
    pub fn unit(n: usize) -> Self {
        WreathElem {
            sigma: Permutation::identity(n),
            letters: vec![0; n],
            u: 0,
        }
    }
}

/// The commutative triangle `θ: H0 → H1`, `ε1: H1 → Z/2`, `ε0 = ε1 ∘ θ`
/// driving a wreath construction.
#[derive(Debug, Clone)]
pub struct WreathSpec {
    pub h0: FiniteGroup,
    pub h1: FiniteGroup,
    pub theta: Vec<usize>,
    pub eps0: Vec<usize>,
    pub eps1: Vec<usize>,
}

impl WreathSpec {
    /// Validates the homomorphisms and the triangle over `Z/2`.
    pub fn new(
        h0: FiniteGroup,
        h1: FiniteGroup,
        theta: Vec<usize>,
        eps0: Vec<usize>,
        eps1: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let z2 = FiniteGroup::cyclic(2);
        h0.check_homomorphism(&h1, &theta)?;
        h0.check_homomorphism(&z2, &eps0)?;
        h1.check_homomorphism(&z2, &eps1)?;
        for u in 0..h0.order() {
            if eps1[theta[u]] != eps0[u] {
                return Err(GroupError::Parse(format!(
                    "triangle does not commute at H0 element {u}"
                )));
            }
        }
        Ok(WreathSpec {
            h0,
            h1,
            theta,
            eps0,
            eps1,
        })
    }

    /// `(τ; ȳ; v) · (σ; x̄; u) = (τσ; y_{σ(1)}x_1, …, y_{σ(n)}x_n; vu)`.
    pub fn mul_elem(&self, a: &WreathElem, b: &WreathElem) -> WreathElem {
        let n = a.sigma.degree();
        assert_eq!(n, b.sigma.degree());
        let letters = (1..=n)
            .map(|i| self.h1.mul(a.letters[b.sigma.apply(i) - 1], b.letters[i - 1]))
            .collect();
        WreathElem {
            sigma: a.sigma.compose(&b.sigma),
            letters,
            u: self.h0.mul(a.u, b.u),
        }
    }

    pub fn inv_elem(&self, a: &WreathElem) -> WreathElem {
        let n = a.sigma.degree();
        let sigma_inv = a.sigma.inverse();
        let letters = (1..=n)
            .map(|j| self.h1.inv(a.letters[sigma_inv.apply(j) - 1]))
            .collect();
        WreathElem {
            sigma: sigma_inv,
            letters,
            u: self.h0.inv(a.u),
        }
    }

    /// The image in `S_n × Z/2` that drives the hom-set action.
    pub fn signed(&self, e: &WreathElem) -> SignedPermutation {
        SignedPermutation::new(e.sigma.clone(), self.eps0[e.u] == 1)
    }

    /// The restriction map of the wreath crossed interval group.
    ///
    /// The permutation part composes the blockwise reversals dictated by the
    /// `ε`-signs of the letters inside `γ(σ; …)`, then lets the sign of `u`
    /// reverse the outer three blocks `(k_{-∞}, interior, k_∞)`. The letters
    /// of the result are pulled back along `φ`, reading `θ(u)` over `±∞`.
    pub fn restrict_elem(&self, phi: &IntervalMorphism, e: &WreathElem) -> WreathElem {
        let n = phi.codomain();
        assert_eq!(e.sigma.degree(), n, "restrict: degree mismatch");
        let counts = phi.counts();
        let eu = self.eps0[e.u] == 1;
        let inner_blocks: Vec<Permutation> = (1..=n)
            .map(|j| beta_pow(counts[j], self.eps1[e.letters[j - 1]] == 1))
            .collect();
        let inner = gamma_sym(&e.sigma, &inner_blocks);
        let outer = gamma_sym(
            &beta_pow(3, eu),
            &[
                beta_pow(counts[0], eu),
                inner,
                beta_pow(counts[n + 1], eu),
            ],
        );
        let letters = phi
            .interior_images()
            .iter()
            .map(|p| match p {
                Point::Int(j) => e.letters[j - 1],
                _ => self.theta[e.u],
            })
            .collect();
        WreathElem {
            sigma: outer,
            letters,
            u: e.u,
        }
    }

    /// Independent description of the permutation part of `restrict_elem`:
    /// the unique permutation making the square over `φ` and `φ^{(σ;u)}`
    /// commute, with each interior fiber mapped monotonically up or down
    /// according to `ε(x_j)`, and the `±∞` fiber according to `εθ(u)`.
    pub fn restrict_perm_by_fibers(&self, phi: &IntervalMorphism, e: &WreathElem) -> Permutation {
        let n = phi.codomain();
        let m = phi.domain();
        let eu = self.eps0[e.u] == 1;
        let acted = interval::act(phi, &self.signed(e));
        let fiber = |psi: &IntervalMorphism, target: Point| -> Vec<usize> {
            psi.interior_images()
                .iter()
                .enumerate()
                .filter(|(_, p)| **p == target)
                .map(|(i, _)| i + 1)
                .collect()
        };
        let mut images = vec![0usize; m];
        for j in 1..=n {
            let src = fiber(phi, Point::Int(j));
            let mut dst = fiber(&acted, Point::Int(e.sigma.apply(j)));
            if self.eps1[e.letters[j - 1]] == 1 {
                dst.reverse();
            }
            for (s, d) in src.iter().zip(dst.iter()) {
                images[s - 1] = *d;
            }
        }
        let mut src_inf: Vec<usize> = fiber(phi, Point::NegInf);
        src_inf.extend(fiber(phi, Point::PosInf));
        let mut dst_inf: Vec<usize> = fiber(&acted, Point::NegInf);
        dst_inf.extend(fiber(&acted, Point::PosInf));
        if eu {
            dst_inf.reverse();
        }
        for (s, d) in src_inf.iter().zip(dst_inf.iter()) {
            images[s - 1] = *d;
        }
        Permutation::new(images)
    }
}

/// `W(Z/2, Z/2)`, the terminal crossed interval group's defining triangle.
pub fn weyl_spec() -> WreathSpec {
    let z2 = FiniteGroup::cyclic(2);
    WreathSpec::new(z2.clone(), z2, vec![0, 1], vec![0, 1], vec![0, 1]).unwrap()
}

/// Interface of a crossed interval group with finite degreewise groups.
///
/// Elements are indices into the degreewise group; `group(n)` materializes
/// the multiplication table (cached per degree). Implementations may
/// override `mul`/`inv`/`unit` to avoid building tables at high degree.
pub trait CrossedGroup: Send + Sync {
    fn name(&self) -> String;

    /// The group at degree `n` as an explicit table. The unit is index 0.
    fn group(&self, n: usize) -> Arc<FiniteGroup>;

    /// `φ*: G_n → G_m` for `φ: ⟪m⟫ → ⟪n⟫`.
    fn restrict(&self, phi: &IntervalMorphism, x: usize) -> usize;

    /// The image of `x ∈ G_n` in `S_n × Z/2`, driving the hom-set action.
    fn signed_perm(&self, n: usize, x: usize) -> SignedPermutation;

    /// The structure map to the terminal crossed interval group.
    fn to_weyl(&self, n: usize, x: usize) -> WreathElem;

    fn order(&self, n: usize) -> usize {
        self.group(n).order()
    }

    fn mul(&self, n: usize, a: usize, b: usize) -> usize {
        self.group(n).mul(a, b)
    }

    fn inv(&self, n: usize, a: usize) -> usize {
        self.group(n).inv(a)
    }

    fn unit(&self, _n: usize) -> usize {
        0
    }

    /// The action `φ ↦ φ^x` for `x ∈ G_n` at the codomain degree.
    fn act(&self, phi: &IntervalMorphism, x: usize) -> IntervalMorphism {
        interval::act(phi, &self.signed_perm(phi.codomain(), x))
    }

    /// Printable form of an element, used in violation witnesses.
    fn describe(&self, n: usize, x: usize) -> String {
        let _ = n;
        format!("#{x}")
    }
}

pub(crate) struct DegreeCache<T> {
    slots: Mutex<BTreeMap<usize, Arc<T>>>,
}

impl<T> DegreeCache<T> {
    pub fn new() -> Self {
        DegreeCache {
            slots: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn get_or_build(&self, n: usize, build: impl FnOnce() -> T) -> Arc<T> {
        let mut slots = self.slots.lock().unwrap();
        slots.entry(n).or_insert_with(|| Arc::new(build())).clone()
    }
}

pub(crate) struct WreathDegree {
    pub elems: Vec<WreathElem>,
    pub index: HashMap<WreathElem, usize>,
}

/// A crossed interval group of the form `W(H0, H1)`.
///
/// Element enumerations and multiplication tables are cached separately per
/// degree: restriction only needs the enumeration, so tables are built only
/// when a caller asks for the explicit group.
pub struct WreathCrossed {
    spec: WreathSpec,
    label: String,
    cache: DegreeCache<WreathDegree>,
    tables: DegreeCache<Arc<FiniteGroup>>,
}

impl WreathCrossed {
    pub fn new(spec: WreathSpec, label: impl Into<String>) -> Self {
        WreathCrossed {
            spec,
            label: label.into(),
            cache: DegreeCache::new(),
            tables: DegreeCache::new(),
        }
    }

    pub fn spec(&self) -> &WreathSpec {
        &self.spec
    }

    fn degree(&self, n: usize) -> Arc<WreathDegree> {
        self.cache.get_or_build(n, || {
            let perms = Permutation::all(n);
            let h1 = self.spec.h1.order();
            let h0 = self.spec.h0.order();
            let mut elems = Vec::with_capacity(perms.len() * h1.pow(n as u32) * h0);
            for sigma in &perms {
                let mut letters = vec![0usize; n];
                loop {
                    for u in 0..h0 {
                        elems.push(WreathElem {
                            sigma: sigma.clone(),
                            letters: letters.clone(),
                            u,
                        });
                    }
                    // increment mixed-radix letters, most significant first
                    let mut pos = n;
                    loop {
                        if pos == 0 {
                            break;
                        }
                        pos -= 1;
                        letters[pos] += 1;
                        if letters[pos] < h1 {
                            break;
                        }
                        letters[pos] = 0;
                    }
                    if letters.iter().all(|&l| l == 0) {
                        break;
                    }
                }
            }
            let index: HashMap<WreathElem, usize> = elems
                .iter()
                .enumerate()
                .map(|(i, e)| (e.clone(), i))
                .collect();
            WreathDegree { elems, index }
        })
    }

    pub fn elem(&self, n: usize, x: usize) -> WreathElem {
        self.degree(n).elems[x].clone()
    }

    pub fn index_of(&self, n: usize, e: &WreathElem) -> usize {
        self.degree(n).index[e]
    }
}

impl CrossedGroup for WreathCrossed {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn group(&self, n: usize) -> Arc<FiniteGroup> {
        let d = self.degree(n);
        self.tables
            .get_or_build(n, || {
                let order = d.elems.len();
                let mut mul = vec![0usize; order * order];
                for (a, ea) in d.elems.iter().enumerate() {
                    for (b, eb) in d.elems.iter().enumerate() {
                        mul[a * order + b] = d.index[&self.spec.mul_elem(ea, eb)];
                    }
                }
                Arc::new(
                    FiniteGroup::new(order, mul).expect("wreath construction yields a group"),
                )
            })
            .as_ref()
            .clone()
    }

    fn order(&self, n: usize) -> usize {
        self.degree(n).elems.len()
    }

    fn mul(&self, n: usize, a: usize, b: usize) -> usize {
        let d = self.degree(n);
        d.index[&self.spec.mul_elem(&d.elems[a], &d.elems[b])]
    }

    fn inv(&self, n: usize, a: usize) -> usize {
        let d = self.degree(n);
        d.index[&self.spec.inv_elem(&d.elems[a])]
    }

    fn restrict(&self, phi: &IntervalMorphism, x: usize) -> usize {
        let src = self.degree(phi.codomain());
        let dst = self.degree(phi.domain());
        dst.index[&self.spec.restrict_elem(phi, &src.elems[x])]
    }

    fn signed_perm(&self, n: usize, x: usize) -> SignedPermutation {
        self.spec.signed(&self.degree(n).elems[x])
    }

    fn to_weyl(&self, n: usize, x: usize) -> WreathElem {
        let e = &self.degree(n).elems[x];
        WreathElem {
            sigma: e.sigma.clone(),
            letters: e.letters.iter().map(|&l| self.spec.eps1[l]).collect(),
            u: self.spec.eps0[e.u],
        }
    }

    fn describe(&self, n: usize, x: usize) -> String {
        format!("{:?}", self.degree(n).elems[x])
    }
}

/// The symmetric crossed interval group `W(*, *)`.
pub fn symmetric() -> WreathCrossed {
    let t = FiniteGroup::trivial();
    WreathCrossed::new(
        WreathSpec::new(t.clone(), t, vec![0], vec![0], vec![0]).unwrap(),
        "sym",
    )
}

/// The hyperoctahedral crossed interval group `W(*, Z/2)`.
pub fn hyperoctahedral() -> WreathCrossed {
    let t = FiniteGroup::trivial();
    let z2 = FiniteGroup::cyclic(2);
    WreathCrossed::new(
        WreathSpec::new(t, z2, vec![0], vec![0], vec![0, 1]).unwrap(),
        "hyperoctahedral",
    )
}

/// The terminal crossed interval group `W(Z/2, Z/2)`.
pub fn weyl() -> WreathCrossed {
    WreathCrossed::new(weyl_spec(), "weyl")
}

/// The constant presheaf at `Z/2` whose nontrivial element acts by order
/// reversal `(β_n; flip)`. Not inert-trivial, hence not over the
/// hyperoctahedral subgroup.
pub struct ReflCrossed {
    z2: Arc<FiniteGroup>,
}

pub fn refl() -> ReflCrossed {
    ReflCrossed {
        z2: Arc::new(FiniteGroup::cyclic(2)),
    }
}

impl CrossedGroup for ReflCrossed {
    fn name(&self) -> String {
        "refl".into()
    }

    fn group(&self, _n: usize) -> Arc<FiniteGroup> {
        self.z2.clone()
    }

    fn restrict(&self, _phi: &IntervalMorphism, x: usize) -> usize {
        x
    }

    fn signed_perm(&self, n: usize, x: usize) -> SignedPermutation {
        if x == 0 {
            SignedPermutation::identity(n)
        } else {
            SignedPermutation::new(Permutation::reversal(n), true)
        }
    }

    fn to_weyl(&self, n: usize, x: usize) -> WreathElem {
        if x == 0 {
            WreathElem::unit(n)
        } else {
            WreathElem {
                sigma: Permutation::reversal(n),
                letters: vec![1; n],
                u: 1,
            }
        }
    }

    fn describe(&self, _n: usize, x: usize) -> String {
        if x == 0 { "e".into() } else { "flip".into() }
    }
}

/// The constant presheaf at a finite group `Q`, with trivial action and
/// trivial structure map. A test fixture: it is a crossed interval group for
/// every `Q`, but operadic only when `Q` is abelian.
pub struct ConstantCrossed {
    q: Arc<FiniteGroup>,
    label: String,
}

pub fn constant(q: FiniteGroup, label: impl Into<String>) -> ConstantCrossed {
    ConstantCrossed {
        q: Arc::new(q),
        label: label.into(),
    }
}

impl CrossedGroup for ConstantCrossed {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn group(&self, _n: usize) -> Arc<FiniteGroup> {
        self.q.clone()
    }

    fn restrict(&self, _phi: &IntervalMorphism, x: usize) -> usize {
        x
    }

    fn signed_perm(&self, n: usize, _x: usize) -> SignedPermutation {
        SignedPermutation::identity(n)
    }

    fn to_weyl(&self, n: usize, _x: usize) -> WreathElem {
        WreathElem::unit(n)
    }
}

/// Negative control: the symmetric crossed interval group with one entry of
/// its degree-2 multiplication table deliberately corrupted.
pub struct CorruptedSymmetric {
    inner: WreathCrossed,
    bad_group2: Arc<FiniteGroup>,
}

pub fn corrupted_symmetric() -> CorruptedSymmetric {
    // S2 = {id, swap}; corrupt swap·swap to give swap instead of id
    let bad = FiniteGroup::new_unchecked(2, vec![0, 1, 1, 1]);
    CorruptedSymmetric {
        inner: symmetric(),
        bad_group2: Arc::new(bad),
    }
}

impl CrossedGroup for CorruptedSymmetric {
    fn name(&self) -> String {
        "sym-corrupted".into()
    }

    fn group(&self, n: usize) -> Arc<FiniteGroup> {
        if n == 2 {
            self.bad_group2.clone()
        } else {
            self.inner.group(n)
        }
    }

    fn restrict(&self, phi: &IntervalMorphism, x: usize) -> usize {
        self.inner.restrict(phi, x)
    }

    fn signed_perm(&self, n: usize, x: usize) -> SignedPermutation {
        self.inner.signed_perm(n, x)
    }

    fn to_weyl(&self, n: usize, x: usize) -> WreathElem {
        self.inner.to_weyl(n, x)
    }
}

/// A morphism `(φ, x)` of the total category: `φ: ⟪m⟫ → ⟪n⟫` together with
/// `x` in the group at the domain degree `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalMorphism {
    pub phi: IntervalMorphism,
    pub x: usize,
}

impl TotalMorphism {
    pub fn new(phi: IntervalMorphism, x: usize) -> Self {
        TotalMorphism { phi, x }
    }

    pub fn identity(g: &dyn CrossedGroup, n: usize) -> Self {
        TotalMorphism {
            phi: IntervalMorphism::identity(n),
            x: g.unit(n),
        }
    }
}

/// `(φ, x) ∘ (ψ, y) = (φ ψ^x, ψ*(x) y)`.
pub fn total_compose(g: &dyn CrossedGroup, a: &TotalMorphism, b: &TotalMorphism) -> TotalMorphism {
    assert_eq!(
        b.phi.codomain(),
        a.phi.domain(),
        "total_compose: object mismatch"
    );
    let psi_acted = g.act(&b.phi, a.x);
    let l = b.phi.domain();
    TotalMorphism {
        phi: a.phi.compose(&psi_acted),
        x: g.mul(l, g.restrict(&b.phi, a.x), b.x),
    }
}

/// Join on total morphisms over the augmented simplex subcategory:
/// `(φ1, x1) ⋆ (φ2, x2) = (φ1 ⋆ φ2, ρ1*(x1) · ρ2*(x2))`.
///
/// The group element is the image of the pair under the two inert block
/// inclusions, which for an inert-trivial crossed group realizes
/// `γ(e_2; x1, x2)`.
pub fn total_join(g: &dyn CrossedGroup, a: &TotalMorphism, b: &TotalMorphism) -> TotalMorphism {
    let m1 = a.phi.domain();
    let m2 = b.phi.domain();
    let kvec = [m1, m2];
    let r1 = interval::rho_of(&kvec, 1);
    let r2 = interval::rho_of(&kvec, 2);
    let joined_x = g.mul(
        m1 + m2,
        g.restrict(&r1, a.x),
        g.restrict(&r2, b.x),
    );
    TotalMorphism {
        phi: interval::join(&a.phi, &b.phi),
        x: joined_x,
    }
}

/// View of a crossed interval group restricted along the inclusion of the
/// augmented simplex subcategory: same degreewise groups, with restriction
/// and action defined only on augmented-simplicial morphisms.
pub struct AugmentedView<'a> {
    pub base: &'a dyn CrossedGroup,
}

impl<'a> AugmentedView<'a> {
    pub fn new(base: &'a dyn CrossedGroup) -> Self {
        AugmentedView { base }
    }

    pub fn restrict(&self, phi: &IntervalMorphism, x: usize) -> usize {
        assert!(
            phi.is_augmented_simplicial(),
            "augmented view: morphism is not augmented-simplicial"
        );
        self.base.restrict(phi, x)
    }

    pub fn act(&self, phi: &IntervalMorphism, x: usize) -> IntervalMorphism {
        assert!(
            phi.is_augmented_simplicial(),
            "augmented view: morphism is not augmented-simplicial"
        );
        self.base.act(phi, x)
    }
}

fn witness_phi(g: &dyn CrossedGroup, phi: &IntervalMorphism, x: usize) -> String {
    format!("φ={:?}, x={}", phi, g.describe(phi.codomain(), x))
}

/// Exhaustive check of the crossed-group axioms, presheaf functoriality, and
/// compatibility of the structure map to the terminal crossed interval
/// group, for all morphisms between degrees `≤ maxdeg`.
pub fn verify_crossed_axioms(g: &dyn CrossedGroup, maxdeg: usize, exec: Exec) -> Report {
    let started = Instant::now();
    let weyl = weyl();
    let wspec = weyl_spec();

    // units indexed by codomain/domain degree pairs
    let mut pair_units = Vec::new();
    for n in 0..=maxdeg {
        for m in 0..=maxdeg {
            for phi in hom_enumerate(m, n) {
                pair_units.push((m, n, phi));
            }
        }
    }
    let pair_violations = exec::run_units(exec, pair_units, |(m, n, phi)| {
        let mut out = Vec::new();
        let gn = g.order(*n);
        let gm_group = g.group(*m);
        for x in 0..gn {
            // identity restriction and identity action
            if *m == *n && phi == &IntervalMorphism::identity(*n) {
                if g.restrict(phi, x) != x {
                    out.push(Violation::new(
                        "functoriality-id",
                        &[*n],
                        format!("id* moved {}", g.describe(*n, x)),
                    ));
                }
            }
            // axiom (ii) over all y, plus structure-map compatibility
            for y in 0..gn {
                let xy = g.mul(*n, x, y);
                let lhs = g.restrict(phi, xy);
                let phi_y = g.act(phi, y);
                let rhs = gm_group.mul(g.restrict(&phi_y, x), g.restrict(phi, y));
                if lhs != rhs {
                    out.push(Violation::new(
                        "axiom-ii",
                        &[*m, *n],
                        format!(
                            "φ={:?}, x={}, y={}",
                            phi,
                            g.describe(*n, x),
                            g.describe(*n, y)
                        ),
                    ));
                }
            }
            // to_weyl commutes with restriction
            let image = g.to_weyl(*n, x);
            let restricted_image = wspec.restrict_elem(phi, &image);
            let image_of_restricted = g.to_weyl(*m, g.restrict(phi, x));
            if restricted_image != image_of_restricted {
                out.push(Violation::new(
                    "weyl-naturality",
                    &[*m, *n],
                    witness_phi(g, phi, x),
                ));
            }
            // the action factors through the structure map
            if g.signed_perm(*n, x) != wspec.signed(&image) {
                out.push(Violation::new(
                    "weyl-action",
                    &[*n],
                    format!("x={}", g.describe(*n, x)),
                ));
            }
        }
        out
    });

    // triple units for axiom (i) and contravariant functoriality
    let mut triple_units = Vec::new();
    for n in 0..=maxdeg {
        for m in 0..=maxdeg {
            for l in 0..=maxdeg {
                for phi in hom_enumerate(m, n) {
                    for psi in hom_enumerate(l, m) {
                        triple_units.push((l, m, n, phi.clone(), psi));
                    }
                }
            }
        }
    }
    let triple_violations = exec::run_units(exec, triple_units, |(l, m, n, phi, psi)| {
        let mut out = Vec::new();
        let composed = phi.compose(psi);
        for x in 0..g.order(*n) {
            // axiom (i)
            let lhs = g.act(&composed, x);
            let rhs = g.act(phi, x).compose(&g.act(psi, g.restrict(phi, x)));
            if lhs != rhs {
                out.push(Violation::new(
                    "axiom-i",
                    &[*l, *m, *n],
                    format!("φ={:?}, ψ={:?}, x={}", phi, psi, g.describe(*n, x)),
                ));
            }
            // contravariant functoriality of the presheaf
            if g.restrict(psi, g.restrict(phi, x)) != g.restrict(&composed, x) {
                out.push(Violation::new(
                    "functoriality",
                    &[*l, *m, *n],
                    format!("φ={:?}, ψ={:?}, x={}", phi, psi, g.describe(*n, x)),
                ));
            }
        }
        out
    });

    // degreewise structure-map homomorphism
    let degree_units: Vec<usize> = (0..=maxdeg).collect();
    let degree_violations = exec::run_units(exec, degree_units, |&n| {
        let mut out = Vec::new();
        let wd = weyl.group(n);
        let _ = &wd;
        for a in 0..g.order(n) {
            for b in 0..g.order(n) {
                let lhs = g.to_weyl(n, g.mul(n, a, b));
                let rhs = wspec.mul_elem(&g.to_weyl(n, a), &g.to_weyl(n, b));
                if lhs != rhs {
                    out.push(Violation::new(
                        "weyl-homomorphism",
                        &[n],
                        format!("a={}, b={}", g.describe(n, a), g.describe(n, b)),
                    ));
                }
            }
        }
        out
    });

    let mut violations = pair_violations;
    violations.extend(triple_violations);
    violations.extend(degree_violations);
    Report::new(
        format!("crossed-axioms({})", g.name()),
        maxdeg,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// Checks that every inert morphism at degrees `≤ maxdeg` is fixed by the
/// action, and — when that holds — that each inert restriction is an
/// injective group homomorphism.
pub fn inert_trivial_action(g: &dyn CrossedGroup, maxdeg: usize, exec: Exec) -> Report {
    let started = Instant::now();
    let mut units = Vec::new();
    for k in 0..=maxdeg {
        for m in 0..=maxdeg {
            for rho in hom_enumerate(m, k) {
                if rho.is_inert() {
                    units.push((m, k, rho));
                }
            }
        }
    }
    let violations = exec::run_units(exec, units, |(m, k, rho)| {
        let mut out = Vec::new();
        let gk = g.order(*k);
        let mut fixed = true;
        for x in 0..gk {
            if g.act(rho, x) != *rho {
                fixed = false;
                out.push(Violation::new(
                    "inert-action",
                    &[*m, *k],
                    format!("ρ={:?}, x={} moves ρ", rho, g.describe(*k, x)),
                ));
            }
        }
        if fixed {
            let gm = g.group(*m);
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for x in 0..gk {
                let rx = g.restrict(rho, x);
                if let Some(prev) = seen.insert(rx, x) {
                    out.push(Violation::new(
                        "inert-injectivity",
                        &[*m, *k],
                        format!(
                            "ρ={:?} identifies {} and {}",
                            rho,
                            g.describe(*k, prev),
                            g.describe(*k, x)
                        ),
                    ));
                }
                for y in 0..gk {
                    if g.restrict(rho, g.mul(*k, x, y)) != gm.mul(rx, g.restrict(rho, y)) {
                        out.push(Violation::new(
                            "inert-homomorphism",
                            &[*m, *k],
                            format!(
                                "ρ={:?}, x={}, y={}",
                                rho,
                                g.describe(*k, x),
                                g.describe(*k, y)
                            ),
                        ));
                    }
                }
            }
        }
        out
    });
    Report::new(
        format!("inert-action({})", g.name()),
        maxdeg,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// A family of degreewise homomorphisms `f_n: G_n → H_n` for `n ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedMapFamily {
    pub maps: Vec<Vec<usize>>,
}

/// Enumerates all families of degreewise group homomorphisms `G → H` up to
/// degree `maxdeg` that are natural with respect to every interval morphism
/// between covered degrees and compatible with the hom-set actions
/// (`φ^{f(x)} = φ^x`).
///
/// The enumeration is truncated at `maxdeg`: families consistent up to the
/// bound are reported, with no claim about higher degrees.
pub fn enumerate_crossed_maps(
    g: &dyn CrossedGroup,
    h: &dyn CrossedGroup,
    maxdeg: usize,
) -> Vec<CrossedMapFamily> {
    // per-degree homomorphism candidates filtered by action compatibility
    let mut candidates: Vec<Vec<Vec<usize>>> = Vec::new();
    for n in 0..=maxdeg {
        let gn = g.group(n);
        let hn = h.group(n);
        let homs = gn.homs_to(&hn);
        let homs: Vec<Vec<usize>> = homs
            .into_iter()
            .filter(|f| {
                (0..gn.order()).all(|x| {
                    let sx = g.signed_perm(n, x);
                    let sfx = h.signed_perm(n, f[x]);
                    // equal actions on every hom-set with domain ≤ maxdeg
                    (0..=maxdeg).all(|m| {
                        hom_enumerate(m, n)
                            .iter()
                            .all(|phi| interval::act(phi, &sx) == interval::act(phi, &sfx))
                    })
                })
            })
            .collect();
        candidates.push(homs);
    }

    // assemble families degree by degree, pruning by naturality
    let mut families: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for n in 0..=maxdeg {
        let mut next = Vec::new();
        for partial in &families {
            'cand: for cand in &candidates[n] {
                // naturality against all previously chosen degrees (both
                // directions) and against degree n itself
                for m in 0..=n {
                    let fm: &Vec<usize> = if m == n { cand } else { &partial[m] };
                    for phi in hom_enumerate(m, n) {
                        for x in 0..g.order(n) {
                            if fm[g.restrict(&phi, x)] != h.restrict(&phi, cand[x]) {
                                continue 'cand;
                            }
                        }
                    }
                    if m < n {
                        for phi in hom_enumerate(n, m) {
                            for x in 0..g.order(m) {
                                if cand[g.restrict(&phi, x)] != h.restrict(&phi, partial[m][x]) {
                                    continue 'cand;
                                }
                            }
                        }
                    }
                }
                let mut extended = partial.clone();
                extended.push(cand.clone());
                next.push(extended);
            }
        }
        families = next;
    }
    families
        .into_iter()
        .map(|maps| CrossedMapFamily { maps })
        .collect()
}

/// The six crossed interval subgroups of the terminal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylSubfamily {
    Trivial,
    C2,
    Sym,
    SymTimesC2,
    Hyperoctahedral,
    Weyl,
}

impl WeylSubfamily {
    pub const ALL: [WeylSubfamily; 6] = [
        WeylSubfamily::Trivial,
        WeylSubfamily::C2,
        WeylSubfamily::Sym,
        WeylSubfamily::SymTimesC2,
        WeylSubfamily::Hyperoctahedral,
        WeylSubfamily::Weyl,
    ];

    /// Membership of an element of `W(Z/2, Z/2)_n`.
    pub fn contains(&self, e: &WreathElem) -> bool {
        let n = e.sigma.degree();
        match self {
            WeylSubfamily::Trivial => *e == WreathElem::unit(n),
            WeylSubfamily::C2 => {
                *e == WreathElem::unit(n)
                    || (e.sigma == Permutation::reversal(n)
                        && e.letters.iter().all(|&l| l == 1)
                        && e.u == 1)
            }
            WeylSubfamily::Sym => e.letters.iter().all(|&l| l == 0) && e.u == 0,
            WeylSubfamily::SymTimesC2 => {
                (e.letters.iter().all(|&l| l == 0) && e.u == 0)
                    || (e.letters.iter().all(|&l| l == 1) && e.u == 1)
            }
            WeylSubfamily::Hyperoctahedral => e.u == 0,
            WeylSubfamily::Weyl => true,
        }
    }
}
