//! Operads, group operads, and the semidirect product over the symmetric
//! operad.
//!
//! Operads are planar, unenriched, and single colored. A group operad is an
//! operad with degreewise group structures and an operad map to the
//! symmetric operad that is a degreewise homomorphism, subject to the
//! interchange identity
//!
//! ```text
//! γ(xy; x_1 y_1, …, x_n y_n) = γ(x; x_{y⁻¹(1)}, …, x_{y⁻¹(n)}) · γ(y; y_1, …, y_n)
//! ```
//!
//! Operads are traits with two kinds of realizations: finitely enumerable
//! per arity (symmetric, trivial, semidirect products, operads built from
//! crossed interval groups) and word-backed with oracle equality (braids).

use crate::exec::{self, Exec};
use crate::perm::{gamma_sym, Permutation};
use crate::report::{Mode, Report, Violation};
use crate::util::{bounded_tuples, product_lists};
use std::fmt::Debug;
use std::time::Instant;

pub trait Operad: Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn name(&self) -> String;

    fn arity(&self, x: &Self::Elem) -> usize;

    /// The arity-1 identity.
    fn identity(&self) -> Self::Elem;

    fn gamma(&self, x: &Self::Elem, inputs: &[Self::Elem]) -> Self::Elem;

    /// Oracle equality; structural equality unless overridden (the braid
    /// operad compares through a faithful representation).
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    /// Enumeration of the elements of a given arity, when finite.
    fn try_elems(&self, n: usize) -> Option<Vec<Self::Elem>>;

    fn elems(&self, n: usize) -> Vec<Self::Elem> {
        self.try_elems(n)
            .unwrap_or_else(|| panic!("{}({n}) is not finitely enumerable", self.name()))
    }
}

/// An operad equipped with a map to the symmetric operad.
pub trait OperadOverSym: Operad {
    fn to_sym(&self, x: &Self::Elem) -> Permutation;
}

/// A pointed operad: base points `e_n` with `γ(e_n; e_{k_1}, …) = e_{Σk}`.
pub trait PointedOperad: Operad {
    fn base(&self, n: usize) -> Self::Elem;
}

/// A group operad. The base point of the pointed structure is the unit.
pub trait GroupOperad: OperadOverSym + PointedOperad {
    fn unit(&self, n: usize) -> Self::Elem {
        self.base(n)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// The symmetric operad: elements of arity `n` are permutations of degree
/// `n`, composition is the block composition, the structure map is the
/// identity.
#[derive(Debug, Clone, Default)]
pub struct SymOperad;

impl Operad for SymOperad {
    type Elem = Permutation;

    fn name(&self) -> String {
        "sym".into()
    }

    fn arity(&self, x: &Permutation) -> usize {
        x.degree()
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(1)
    }

    fn gamma(&self, x: &Permutation, inputs: &[Permutation]) -> Permutation {
        gamma_sym(x, inputs)
    }

    fn try_elems(&self, n: usize) -> Option<Vec<Permutation>> {
        Some(Permutation::all(n))
    }
}

impl OperadOverSym for SymOperad {
    fn to_sym(&self, x: &Permutation) -> Permutation {
        x.clone()
    }
}

impl PointedOperad for SymOperad {
    fn base(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }
}

impl GroupOperad for SymOperad {
    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn inv(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }
}

/// The trivial operad: a single element per arity, remembered as its arity.
#[derive(Debug, Clone, Default)]
pub struct TrivialOperad;

impl Operad for TrivialOperad {
    type Elem = usize;

    fn name(&self) -> String {
        "trivial".into()
    }

    fn arity(&self, x: &usize) -> usize {
        *x
    }

    fn identity(&self) -> usize {
        1
    }

    fn gamma(&self, _x: &usize, inputs: &[usize]) -> usize {
        inputs.iter().sum()
    }

    fn try_elems(&self, n: usize) -> Option<Vec<usize>> {
        Some(vec![n])
    }
}

impl OperadOverSym for TrivialOperad {
    fn to_sym(&self, x: &usize) -> Permutation {
        Permutation::identity(*x)
    }
}

impl PointedOperad for TrivialOperad {
    fn base(&self, n: usize) -> usize {
        n
    }
}

impl GroupOperad for TrivialOperad {
    fn mul(&self, a: &usize, _b: &usize) -> usize {
        *a
    }

    fn inv(&self, a: &usize) -> usize {
        *a
    }
}

/// Semidirect product `X ⋊ Y` of operads, for `Y` over the symmetric
/// operad: degreewise products, with the `X`-inputs reindexed through the
/// permutation image of the `Y`-component:
///
/// ```text
/// γ((x, y); (x_1, y_1), …) = (γ_X(x; x_{ρ(y)⁻¹(1)}, …), γ_Y(y; y_1, …))
/// ```
///
/// When `X` is also over the symmetric operad, the product carries the
/// multiplication-pushforward structure map `(x, y) ↦ ρ(x) ρ(y)`.
#[derive(Debug, Clone)]
pub struct SemidirectOperad<X, Y> {
    pub left: X,
    pub right: Y,
}

impl<X: Operad, Y: OperadOverSym> SemidirectOperad<X, Y> {
    pub fn new(left: X, right: Y) -> Self {
        SemidirectOperad { left, right }
    }
}

impl<X: Operad, Y: OperadOverSym> Operad for SemidirectOperad<X, Y> {
    type Elem = (X::Elem, Y::Elem);

    fn name(&self) -> String {
        format!("{}⋊{}", self.left.name(), self.right.name())
    }

    fn arity(&self, x: &Self::Elem) -> usize {
        self.right.arity(&x.1)
    }

    fn identity(&self) -> Self::Elem {
        (self.left.identity(), self.right.identity())
    }

    fn gamma(&self, x: &Self::Elem, inputs: &[Self::Elem]) -> Self::Elem {
        let n = self.arity(x);
        assert_eq!(inputs.len(), n);
        let rho_inv = self.right.to_sym(&x.1).inverse();
        let left_inputs: Vec<X::Elem> = (1..=n)
            .map(|i| inputs[rho_inv.apply(i) - 1].0.clone())
            .collect();
        let right_inputs: Vec<Y::Elem> = inputs.iter().map(|p| p.1.clone()).collect();
        (
            self.left.gamma(&x.0, &left_inputs),
            self.right.gamma(&x.1, &right_inputs),
        )
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.left.equal(&a.0, &b.0) && self.right.equal(&a.1, &b.1)
    }

    fn try_elems(&self, n: usize) -> Option<Vec<Self::Elem>> {
        let ls = self.left.try_elems(n)?;
        let rs = self.right.try_elems(n)?;
        let mut out = Vec::with_capacity(ls.len() * rs.len());
        for l in &ls {
            for r in &rs {
                out.push((l.clone(), r.clone()));
            }
        }
        Some(out)
    }
}

impl<X: OperadOverSym, Y: OperadOverSym> OperadOverSym for SemidirectOperad<X, Y> {
    fn to_sym(&self, x: &Self::Elem) -> Permutation {
        self.left.to_sym(&x.0).compose(&self.right.to_sym(&x.1))
    }
}

impl<X: PointedOperad, Y: OperadOverSym + PointedOperad> PointedOperad
    for SemidirectOperad<X, Y>
{
    fn base(&self, n: usize) -> Self::Elem {
        (self.left.base(n), self.right.base(n))
    }
}

pub fn sym_operad() -> SymOperad {
    SymOperad
}

pub fn trivial_operad() -> TrivialOperad {
    TrivialOperad
}

/// The composition of the triple semidirect product written in one step;
/// both bracketings of `X ⋊ Y ⋊ Z` must agree with it elementwise.
pub fn semidirect_triple_gamma<X, Y, Z>(
    x_op: &X,
    y_op: &Y,
    z_op: &Z,
    x: &(X::Elem, Y::Elem, Z::Elem),
    inputs: &[(X::Elem, Y::Elem, Z::Elem)],
) -> (X::Elem, Y::Elem, Z::Elem)
where
    X: Operad,
    Y: OperadOverSym,
    Z: OperadOverSym,
{
    let n = inputs.len();
    let rho_y_inv = y_op.to_sym(&x.1).inverse();
    let pi_z_inv = z_op.to_sym(&x.2).inverse();
    let xs: Vec<X::Elem> = (1..=n)
        .map(|i| inputs[pi_z_inv.apply(rho_y_inv.apply(i)) - 1].0.clone())
        .collect();
    let ys: Vec<Y::Elem> = (1..=n)
        .map(|i| inputs[pi_z_inv.apply(i) - 1].1.clone())
        .collect();
    let zs: Vec<Z::Elem> = inputs.iter().map(|t| t.2.clone()).collect();
    (
        x_op.gamma(&x.0, &xs),
        y_op.gamma(&x.1, &ys),
        z_op.gamma(&x.2, &zs),
    )
}

/// Work list of `(n, k⃗)` shapes with `n ≤ arity_bound` and
/// `k_i ≤ input_bound`.
fn shapes(arity_bound: usize, input_bound: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for n in 0..=arity_bound {
        for ks in bounded_tuples(n, input_bound) {
            out.push((n, ks));
        }
    }
    out
}

/// Exhaustive group-operad verification: the interchange identity, the
/// structure map being an operad map and a degreewise homomorphism, and the
/// operad unit laws.
pub fn verify_group_operad<G: GroupOperad>(
    g: &G,
    arity_bound: usize,
    input_bound: usize,
    exec: Exec,
) -> Report {
    let started = Instant::now();
    let mut units = Vec::new();
    for (n, ks) in shapes(arity_bound, input_bound) {
        let elems = g.elems(n);
        for x in &elems {
            for y in &elems {
                units.push((n, ks.clone(), x.clone(), y.clone()));
            }
        }
    }
    let violations = exec::run_units(exec, units, |(n, ks, x, y)| {
        let mut out = Vec::new();
        let input_lists: Vec<Vec<G::Elem>> = ks.iter().map(|&k| g.elems(k)).collect();
        let tuples = product_lists(&input_lists);
        let y_inv = g.to_sym(y).inverse();
        let xy = g.mul(x, y);
        for xs in &tuples {
            for ys in &tuples {
                let pairs: Vec<G::Elem> = xs
                    .iter()
                    .zip(ys.iter())
                    .map(|(a, b)| g.mul(a, b))
                    .collect();
                let lhs = g.gamma(&xy, &pairs);
                let reindexed: Vec<G::Elem> =
                    (1..=*n).map(|i| xs[y_inv.apply(i) - 1].clone()).collect();
                let rhs = g.mul(&g.gamma(x, &reindexed), &g.gamma(y, ys));
                if !g.equal(&lhs, &rhs) {
                    out.push(Violation::new(
                        "interchange",
                        &[*n],
                        format!("x={x:?}, y={y:?}, xs={xs:?}, ys={ys:?}"),
                    ));
                }
            }
        }
        // per-(x, ks) checks, run once by guarding on the diagonal
        if g.equal(y, x) {
            for xs in &tuples {
                let gx = g.gamma(x, xs);
                let sym_inputs: Vec<Permutation> = xs.iter().map(|a| g.to_sym(a)).collect();
                if g.to_sym(&gx) != gamma_sym(&g.to_sym(x), &sym_inputs) {
                    out.push(Violation::new(
                        "structure-map-operad",
                        &[*n],
                        format!("x={x:?}, xs={xs:?}"),
                    ));
                }
            }
            // γ(x; id, …, id) == x and γ(id; x) == x
            let ids = vec![g.identity(); *n];
            if !g.equal(&g.gamma(x, &ids), x) {
                out.push(Violation::new("unit-right", &[*n], format!("x={x:?}")));
            }
            if !g.equal(&g.gamma(&g.identity(), std::slice::from_ref(x)), x) {
                out.push(Violation::new("unit-left", &[*n], format!("x={x:?}")));
            }
        }
        out
    });

    // degreewise homomorphism of the structure map
    let mut hom_violations = Vec::new();
    for n in 0..=arity_bound {
        let elems = g.elems(n);
        for a in &elems {
            for b in &elems {
                if g.to_sym(&g.mul(a, b)) != g.to_sym(a).compose(&g.to_sym(b)) {
                    hom_violations.push(Violation::new(
                        "structure-map-homomorphism",
                        &[n],
                        format!("a={a:?}, b={b:?}"),
                    ));
                }
            }
        }
    }

    let mut violations = violations;
    violations.extend(hom_violations);
    Report::new(
        format!("group-operad({})", g.name()),
        arity_bound,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// Unit-structure checks of a group operad: composition on arity 1 is the
/// group multiplication and abelian, units compose to units, and
/// `x ↦ γ(x; e_n)` is a homomorphism.
pub fn unit_structure_checks<G: GroupOperad>(g: &G, bound: usize) -> Report {
    let started = Instant::now();
    let mut violations = Vec::new();
    let ones = g.elems(1);
    for a in &ones {
        for b in &ones {
            if !g.equal(&g.gamma(a, std::slice::from_ref(b)), &g.mul(a, b)) {
                violations.push(Violation::new(
                    "arity-one-composition",
                    &[1],
                    format!("a={a:?}, b={b:?}"),
                ));
            }
            if !g.equal(&g.mul(a, b), &g.mul(b, a)) {
                violations.push(Violation::new(
                    "arity-one-abelian",
                    &[1],
                    format!("a={a:?}, b={b:?}"),
                ));
            }
        }
    }
    for n in 0..=bound {
        for ks in bounded_tuples(n, bound) {
            let inputs: Vec<G::Elem> = ks.iter().map(|&k| g.unit(k)).collect();
            let total: usize = ks.iter().sum();
            if !g.equal(&g.gamma(&g.unit(n), &inputs), &g.unit(total)) {
                violations.push(Violation::new(
                    "units-compose",
                    &[n],
                    format!("k⃗={ks:?}"),
                ));
            }
        }
        // x ↦ γ(x; e_n) is a homomorphism G(1) → G(n)
        for a in &ones {
            for b in &ones {
                let en = g.unit(n);
                let lhs = g.gamma(&g.mul(a, b), std::slice::from_ref(&en));
                let rhs = g.mul(
                    &g.gamma(a, std::slice::from_ref(&en)),
                    &g.gamma(b, std::slice::from_ref(&en)),
                );
                if !g.equal(&lhs, &rhs) {
                    violations.push(Violation::new(
                        "unit-embedding-homomorphism",
                        &[n],
                        format!("a={a:?}, b={b:?}"),
                    ));
                }
            }
        }
    }
    Report::new(
        format!("unit-structure({})", g.name()),
        bound,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// Operad associativity: nested composition agrees with flattened
/// composition, with outer arity ≤ `outer_bound` and all other arities
/// ≤ `inner_bound`.
pub fn verify_operad_assoc<O: Operad>(
    o: &O,
    outer_bound: usize,
    inner_bound: usize,
    exec: Exec,
) -> Report {
    let started = Instant::now();
    let mut units = Vec::new();
    for n in 0..=outer_bound {
        for ks in bounded_tuples(n, inner_bound) {
            for x in o.elems(n) {
                units.push((n, ks.clone(), x));
            }
        }
    }
    let violations = exec::run_units(exec, units, |(n, ks, x)| {
        let mut out = Vec::new();
        let mid_lists: Vec<Vec<O::Elem>> = ks.iter().map(|&k| o.elems(k)).collect();
        for mids in product_lists(&mid_lists) {
            let inner_shape_lists: Vec<Vec<Vec<usize>>> =
                ks.iter().map(|&k| bounded_tuples(k, inner_bound)).collect();
            for inner_shapes in product_lists(&inner_shape_lists) {
                let inner_lists: Vec<Vec<O::Elem>> = inner_shapes
                    .iter()
                    .flat_map(|shape| shape.iter().map(|&w| o.elems(w)))
                    .collect();
                for inners in product_lists(&inner_lists) {
                    let mut offset = 0;
                    let composed: Vec<O::Elem> = mids
                        .iter()
                        .zip(inner_shapes.iter())
                        .map(|(mid, shape)| {
                            let cnt = shape.len();
                            let slice = &inners[offset..offset + cnt];
                            offset += cnt;
                            o.gamma(mid, slice)
                        })
                        .collect();
                    let lhs = o.gamma(&o.gamma(x, &mids), &inners);
                    let rhs = o.gamma(x, &composed);
                    if !o.equal(&lhs, &rhs) {
                        out.push(Violation::new(
                            "associativity",
                            &[*n],
                            format!("x={x:?}, mids={mids:?}, inners={inners:?}"),
                        ));
                    }
                }
            }
        }
        out
    });
    Report::new(
        format!("operad-associativity({})", o.name()),
        outer_bound,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// Negative control: the symmetric operad with `γ([2,1]; id_1, id_1)`
/// deliberately corrupted to the identity.
#[derive(Debug, Clone, Default)]
pub struct CorruptedSymOperad;

pub fn corrupted_sym_operad() -> CorruptedSymOperad {
    CorruptedSymOperad
}

impl Operad for CorruptedSymOperad {
    type Elem = Permutation;

    fn name(&self) -> String {
        "sym-corrupted".into()
    }

    fn arity(&self, x: &Permutation) -> usize {
        x.degree()
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(1)
    }

    fn gamma(&self, x: &Permutation, inputs: &[Permutation]) -> Permutation {
        let swap = Permutation::new(vec![2, 1]);
        if *x == swap && inputs.len() == 2 && inputs.iter().all(|p| p.degree() == 1) {
            return Permutation::identity(2);
        }
        gamma_sym(x, inputs)
    }

    fn try_elems(&self, n: usize) -> Option<Vec<Permutation>> {
        Some(Permutation::all(n))
    }
}

impl OperadOverSym for CorruptedSymOperad {
    fn to_sym(&self, x: &Permutation) -> Permutation {
        x.clone()
    }
}

impl PointedOperad for CorruptedSymOperad {
    fn base(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }
}

impl GroupOperad for CorruptedSymOperad {
    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn inv(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }
}
