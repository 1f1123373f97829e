//! Operadicity and tameness of crossed interval groups, the operad a
//! crossed interval group generates, and the associated quotients.
//!
//! A crossed interval group is operadic when its inert actions are trivial
//! and the images of dissociated inert restrictions commute; it then carries
//! an operad structure
//!
//! ```text
//! γ(x; x_1, …, x_n) = μ_k⃗*(x) · ρ_1*(x_1) ⋯ ρ_n*(x_n)
//! ```
//!
//! Tameness is the commutation law `μ*(x)·ρ_j*(x_j) ==
//! ρ^{x·k⃗}_{x(j)}*(x_j)·μ*(x)`; together with operadicity and lying over the
//! symmetric crossed interval group it characterizes the crossed interval
//! groups coming from group operads.
//!
//! The quotient constructions force the failed laws degreewise: the subgroup
//! family generated by the offending elements is closed under restriction,
//! and each degree is quotiented by the normal closure.

use crate::crossed::{CrossedGroup, WeylSubfamily, WreathElem};
use crate::exec::{self, Exec};
use crate::group::FiniteGroup;
use crate::interval::{self, hom_enumerate, IntervalMorphism, SignedPermutation};
use crate::operad::{GroupOperad, Operad, OperadOverSym, PointedOperad};
use crate::perm::Permutation;
use crate::report::{Mode, Report, Violation};
use crate::util::bounded_tuples;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("not operadic: {0}")]
    NotOperadic(String),
    #[error("not tame: {0}")]
    NotTame(String),
    #[error("not over the symmetric crossed interval group: {0}")]
    NotOverSym(String),
    #[error("not over the hyperoctahedral crossed interval group: {0}")]
    NotOverHyp(String),
}

/// Checks that the structure map lands in the given subfamily of the
/// terminal crossed interval group at all degrees ≤ `maxdeg`.
pub fn lies_over(g: &dyn CrossedGroup, family: WeylSubfamily, maxdeg: usize) -> Report {
    let started = Instant::now();
    let mut violations = Vec::new();
    for n in 0..=maxdeg {
        for x in 0..g.order(n) {
            if !family.contains(&g.to_weyl(n, x)) {
                violations.push(Violation::new(
                    "structure-map-image",
                    &[n],
                    format!("x={} maps outside {:?}", g.describe(n, x), family),
                ));
            }
        }
    }
    Report::new(
        format!("over-{:?}({})", family, g.name()),
        maxdeg,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// All dissociated pairs of inert morphisms out of `⟪n⟫` with codomains
/// `≤ maxdeg`.
fn dissociated_inert_pairs(
    n: usize,
    maxdeg: usize,
) -> Vec<(IntervalMorphism, IntervalMorphism)> {
    let mut out = Vec::new();
    for k1 in 0..=maxdeg.min(n) {
        for k2 in 0..=maxdeg.min(n) {
            for rho1 in hom_enumerate(n, k1).iter().filter(|f| f.is_inert()) {
                for rho2 in hom_enumerate(n, k2).iter().filter(|f| f.is_inert()) {
                    if interval::dissociated(rho1, rho2) {
                        out.push((rho1.clone(), rho2.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Operadicity: trivial inert actions plus commuting dissociated inert
/// restrictions, exhaustively at degrees ≤ `maxdeg`.
pub fn is_operadic(g: &dyn CrossedGroup, maxdeg: usize, exec: Exec) -> Report {
    let started = Instant::now();
    let inert = crate::crossed::inert_trivial_action(g, maxdeg, exec);
    let units: Vec<usize> = (0..=maxdeg).collect();
    let comm_violations = exec::run_units(exec, units, |&n| {
        let mut out = Vec::new();
        let gn = g.group(n);
        for (rho1, rho2) in dissociated_inert_pairs(n, maxdeg) {
            let k1 = rho1.codomain();
            let k2 = rho2.codomain();
            for x1 in 0..g.order(k1) {
                let r1 = g.restrict(&rho1, x1);
                for x2 in 0..g.order(k2) {
                    let r2 = g.restrict(&rho2, x2);
                    if gn.commutator(r1, r2) != gn.unit() {
                        out.push(Violation::new(
                            "dissociated-commutator",
                            &[n, k1, k2],
                            format!(
                                "ρ1={:?}, ρ2={:?}, x1={}, x2={}",
                                rho1,
                                rho2,
                                g.describe(k1, x1),
                                g.describe(k2, x2)
                            ),
                        ));
                    }
                }
            }
        }
        out
    });
    let mut parts = vec![inert];
    parts.push(Report::new(
        format!("dissociated-commutators({})", g.name()),
        maxdeg,
        Mode::Exhaustive,
        comm_violations,
        started,
    ));
    Report::merge(format!("operadic({})", g.name()), maxdeg, parts)
}

/// Tameness: `μ_k⃗*(x)·ρ_j*(x_j) == ρ^{x·k⃗}_{x(j)}*(x_j)·μ_k⃗*(x)` for all
/// width vectors with total ≤ `maxdeg` and length ≤ `maxdeg`.
///
/// Returns an error if the structure does not lie over the symmetric
/// crossed interval group.
pub fn is_tame(g: &dyn CrossedGroup, maxdeg: usize, exec: Exec) -> Result<Report, StructureError> {
    let over = lies_over(g, WeylSubfamily::Sym, maxdeg);
    if !over.passed() {
        return Err(StructureError::NotOverSym(
            over.violations[0].witness.clone(),
        ));
    }
    let started = Instant::now();
    let mut units = Vec::new();
    for n in 0..=maxdeg {
        for ks in bounded_tuples(n, maxdeg) {
            if ks.iter().sum::<usize>() <= maxdeg {
                units.push((n, ks));
            }
        }
    }
    let violations = exec::run_units(exec, units, |(n, ks)| {
        let mut out = Vec::new();
        let total: usize = ks.iter().sum();
        let gt = g.group(total);
        let mu = interval::mu_of(ks);
        for x in 0..g.order(*n) {
            let mu_x = g.restrict(&mu, x);
            let perm = g.signed_perm(*n, x).perm;
            let perm_inv = perm.inverse();
            let moved: Vec<usize> = (1..=*n).map(|j| ks[perm_inv.apply(j) - 1]).collect();
            for (j0, &kj) in ks.iter().enumerate() {
                let j = j0 + 1;
                let rho = interval::rho_of(ks, j);
                let rho_moved = interval::rho_of(&moved, perm.apply(j));
                for xj in 0..g.order(kj) {
                    let lhs = gt.mul(mu_x, g.restrict(&rho, xj));
                    let rhs = gt.mul(g.restrict(&rho_moved, xj), mu_x);
                    if lhs != rhs {
                        out.push(Violation::new(
                            "tameness",
                            &[total, *n],
                            format!(
                                "k⃗={:?}, j={}, x={}, x_j={}",
                                ks,
                                j,
                                g.describe(*n, x),
                                g.describe(kj, xj)
                            ),
                        ));
                    }
                }
            }
        }
        out
    });
    Ok(Report::new(
        format!("tame({})", g.name()),
        maxdeg,
        Mode::Exhaustive,
        violations,
        started,
    ))
}

/// The operad generated by an operadic crossed interval group: elements of
/// arity `n` are `(n, index)` pairs, composed through the restriction maps.
pub struct OperadFromCrossed {
    g: Arc<dyn CrossedGroup>,
}

impl std::fmt::Debug for OperadFromCrossed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OperadFromCrossed({})", self.g.name())
    }
}

/// Builds the operad, refusing inputs that fail operadicity at the bound.
pub fn operad_from_crossed(
    g: Arc<dyn CrossedGroup>,
    maxdeg: usize,
    exec: Exec,
) -> Result<OperadFromCrossed, StructureError> {
    let report = is_operadic(g.as_ref(), maxdeg, exec);
    if !report.passed() {
        let v = &report.violations[0];
        return Err(StructureError::NotOperadic(format!(
            "{} at degrees {:?}: {}",
            v.law, v.degrees, v.witness
        )));
    }
    Ok(OperadFromCrossed { g })
}

impl OperadFromCrossed {
    pub fn crossed(&self) -> &dyn CrossedGroup {
        self.g.as_ref()
    }
}

impl Operad for OperadFromCrossed {
    type Elem = (usize, usize);

    fn name(&self) -> String {
        format!("operad({})", self.g.name())
    }

    fn arity(&self, x: &(usize, usize)) -> usize {
        x.0
    }

    fn identity(&self) -> (usize, usize) {
        (1, self.g.unit(1))
    }

    fn gamma(&self, x: &(usize, usize), inputs: &[(usize, usize)]) -> (usize, usize) {
        let n = x.0;
        assert_eq!(inputs.len(), n, "gamma: expected {n} inputs");
        let kvec: Vec<usize> = inputs.iter().map(|i| i.0).collect();
        let total: usize = kvec.iter().sum();
        let mu = interval::mu_of(&kvec);
        let mut acc = self.g.restrict(&mu, x.1);
        for (j, input) in inputs.iter().enumerate() {
            let rho = interval::rho_of(&kvec, j + 1);
            acc = self.g.mul(total, acc, self.g.restrict(&rho, input.1));
        }
        (total, acc)
    }

    fn try_elems(&self, n: usize) -> Option<Vec<(usize, usize)>> {
        Some((0..self.g.order(n)).map(|i| (n, i)).collect())
    }
}

impl OperadOverSym for OperadFromCrossed {
    fn to_sym(&self, x: &(usize, usize)) -> Permutation {
        let signed = self.g.signed_perm(x.0, x.1);
        assert!(
            !signed.flip,
            "element acts with a flip; not over the symmetric operad"
        );
        signed.perm
    }
}

impl PointedOperad for OperadFromCrossed {
    fn base(&self, n: usize) -> (usize, usize) {
        (n, self.g.unit(n))
    }
}

impl GroupOperad for OperadFromCrossed {
    fn mul(&self, a: &(usize, usize), b: &(usize, usize)) -> (usize, usize) {
        assert_eq!(a.0, b.0);
        (a.0, self.g.mul(a.0, a.1, b.1))
    }

    fn inv(&self, a: &(usize, usize)) -> (usize, usize) {
        (a.0, self.g.inv(a.0, a.1))
    }
}

/// The group operad carried by an operadic, tame crossed interval group
/// over the symmetric one; errors name the failed condition.
pub fn group_operad_from_crossed(
    g: Arc<dyn CrossedGroup>,
    maxdeg: usize,
    exec: Exec,
) -> Result<OperadFromCrossed, StructureError> {
    let over = lies_over(g.as_ref(), WeylSubfamily::Sym, maxdeg);
    if !over.passed() {
        return Err(StructureError::NotOverSym(
            over.violations[0].witness.clone(),
        ));
    }
    let tame = is_tame(g.as_ref(), maxdeg, exec)?;
    if !tame.passed() {
        let v = &tame.violations[0];
        return Err(StructureError::NotTame(format!(
            "{} at degrees {:?}: {}",
            v.law, v.degrees, v.witness
        )));
    }
    operad_from_crossed(g, maxdeg, exec)
}

/// A degreewise family of subgroups, closed under multiplication, inverses,
/// and every restriction between covered degrees.
#[derive(Debug, Clone)]
pub struct SubgroupFamily {
    pub per_degree: Vec<BTreeSet<usize>>,
    /// Distinct non-unit generators found per degree, before closure.
    pub generator_counts: Vec<usize>,
}

impl SubgroupFamily {
    pub fn order(&self, n: usize) -> usize {
        self.per_degree[n].len()
    }

    pub fn is_trivial(&self) -> bool {
        self.per_degree.iter().all(|s| s.len() == 1)
    }
}

/// Closes a seeded family under subgroup closure per degree and all
/// restrictions between degrees ≤ bound.
fn close_family(g: &dyn CrossedGroup, mut seeds: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    let maxdeg = seeds.len() - 1;
    loop {
        let mut grew = false;
        for n in 0..=maxdeg {
            let closed = g
                .group(n)
                .subgroup_closure(&seeds[n].iter().copied().collect::<Vec<_>>());
            if closed.len() != seeds[n].len() {
                grew = true;
            }
            seeds[n] = closed;
        }
        for n in 0..=maxdeg {
            for m in 0..=maxdeg {
                for phi in hom_enumerate(m, n) {
                    let images: Vec<usize> =
                        seeds[n].iter().map(|&x| g.restrict(&phi, x)).collect();
                    for img in images {
                        if seeds[m].insert(img) {
                            grew = true;
                        }
                    }
                }
            }
        }
        if !grew {
            return seeds;
        }
    }
}

/// Checks that a family is closed under every restriction between covered
/// degrees (the crossed-subgroup condition).
pub fn verify_family_closure(
    g: &dyn CrossedGroup,
    family: &SubgroupFamily,
    label: &str,
) -> Report {
    let started = Instant::now();
    let maxdeg = family.per_degree.len() - 1;
    let mut violations = Vec::new();
    for n in 0..=maxdeg {
        for m in 0..=maxdeg {
            for phi in hom_enumerate(m, n) {
                for &x in &family.per_degree[n] {
                    if !family.per_degree[m].contains(&g.restrict(&phi, x)) {
                        violations.push(Violation::new(
                            "family-closure",
                            &[m, n],
                            format!("φ={:?}, x={}", phi, g.describe(n, x)),
                        ));
                    }
                }
            }
        }
    }
    Report::new(
        format!("{label}-closure({})", g.name()),
        maxdeg,
        Mode::Exhaustive,
        violations,
        started,
    )
}

/// The subgroup family generated degreewise by the commutators of
/// dissociated inert restrictions.
pub fn k_family(g: &dyn CrossedGroup, maxdeg: usize) -> SubgroupFamily {
    let mut seeds: Vec<BTreeSet<usize>> = Vec::new();
    let mut generator_counts = Vec::new();
    for n in 0..=maxdeg {
        let gn = g.group(n);
        let mut gens = BTreeSet::new();
        gens.insert(gn.unit());
        for (rho1, rho2) in dissociated_inert_pairs(n, maxdeg) {
            for x1 in 0..g.order(rho1.codomain()) {
                let r1 = g.restrict(&rho1, x1);
                for x2 in 0..g.order(rho2.codomain()) {
                    let r2 = g.restrict(&rho2, x2);
                    gens.insert(gn.commutator(r1, r2));
                }
            }
        }
        generator_counts.push(gens.len() - 1);
        seeds.push(gens);
    }
    SubgroupFamily {
        per_degree: close_family(g, seeds),
        generator_counts,
    }
}

/// The subgroup family generated degreewise by the tameness defects
/// `μ*(x)·ρ_j*(x_j)·μ*(x)⁻¹·ρ'_{x(j)}*(x_j)⁻¹`.
pub fn l_family(g: &dyn CrossedGroup, maxdeg: usize) -> Result<SubgroupFamily, StructureError> {
    let over = lies_over(g, WeylSubfamily::Sym, maxdeg);
    if !over.passed() {
        return Err(StructureError::NotOverSym(
            over.violations[0].witness.clone(),
        ));
    }
    let mut seeds: Vec<BTreeSet<usize>> = (0..=maxdeg)
        .map(|n| {
            let mut s = BTreeSet::new();
            s.insert(g.group(n).unit());
            s
        })
        .collect();
    let mut generator_counts = vec![0usize; maxdeg + 1];
    for n in 0..=maxdeg {
        for ks in bounded_tuples(n, maxdeg) {
            let total: usize = ks.iter().sum();
            if total > maxdeg {
                continue;
            }
            let gt = g.group(total);
            let mu = interval::mu_of(&ks);
            for x in 0..g.order(n) {
                let mu_x = g.restrict(&mu, x);
                let perm = g.signed_perm(n, x).perm;
                let perm_inv = perm.inverse();
                let moved: Vec<usize> = (1..=n).map(|j| ks[perm_inv.apply(j) - 1]).collect();
                for (j0, &kj) in ks.iter().enumerate() {
                    let j = j0 + 1;
                    let rho = interval::rho_of(&ks, j);
                    let rho_moved = interval::rho_of(&moved, perm.apply(j));
                    for xj in 0..g.order(kj) {
                        let defect = gt.mul(
                            gt.mul(mu_x, g.restrict(&rho, xj)),
                            gt.mul(gt.inv(mu_x), gt.inv(g.restrict(&rho_moved, xj))),
                        );
                        seeds[total].insert(defect);
                    }
                }
            }
        }
    }
    for (n, seed) in seeds.iter().enumerate() {
        generator_counts[n] = seed.len() - 1;
    }
    Ok(SubgroupFamily {
        per_degree: close_family(g, seeds),
        generator_counts,
    })
}

/// A degreewise quotient of a crossed interval group by (the normal closure
/// of) a subgroup family, valid up to the bound it was computed at.
pub struct QuotientCrossed {
    base: Arc<dyn CrossedGroup>,
    label: String,
    bound: usize,
    groups: Vec<Arc<FiniteGroup>>,
    projections: Vec<Vec<usize>>,
    representatives: Vec<Vec<usize>>,
}

impl std::fmt::Debug for QuotientCrossed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuotientCrossed({}, bound {})", self.label, self.bound)
    }
}

impl QuotientCrossed {
    /// Quotients each degree by the normal closure of the family, checking
    /// that the induced restriction and action are well defined on
    /// representatives. Violations are returned alongside the structure.
    pub fn new(
        base: Arc<dyn CrossedGroup>,
        family: &SubgroupFamily,
        label: impl Into<String>,
    ) -> (Self, Report) {
        let started = Instant::now();
        let bound = family.per_degree.len() - 1;
        let mut groups = Vec::new();
        let mut projections = Vec::new();
        let mut representatives = Vec::new();
        let mut normals = Vec::new();
        let mut violations = Vec::new();
        for n in 0..=bound {
            let gn = base.group(n);
            let normal =
                gn.normal_closure(&family.per_degree[n].iter().copied().collect::<Vec<_>>());
            let (q, proj, reps) = gn.quotient(&normal);
            // every identified element must act identically on hom-sets
            for &k in &normal {
                if !base.signed_perm(n, k).is_identity() {
                    violations.push(Violation::new(
                        "quotient-action",
                        &[n],
                        format!(
                            "normal-closure element {} acts nontrivially",
                            base.describe(n, k)
                        ),
                    ));
                }
            }
            groups.push(Arc::new(q));
            projections.push(proj);
            representatives.push(reps);
            normals.push(normal);
        }
        // the induced restriction must not depend on representatives
        for n in 0..=bound {
            for m in 0..=bound {
                for phi in hom_enumerate(m, n) {
                    for x in 0..base.order(n) {
                        let image = projections[m][base.restrict(&phi, x)];
                        for &k in &normals[n] {
                            let xk = base.group(n).mul(x, k);
                            if projections[m][base.restrict(&phi, xk)] != image {
                                violations.push(Violation::new(
                                    "quotient-restriction",
                                    &[m, n],
                                    format!(
                                        "φ={:?}, x={}, k={}",
                                        phi,
                                        base.describe(n, x),
                                        base.describe(n, k)
                                    ),
                                ));
                            }
                        }
                    }
                }
            }
        }
        let label = label.into();
        let report = Report::new(
            format!("{label}-soundness"),
            bound,
            Mode::Exhaustive,
            violations,
            started,
        );
        (
            QuotientCrossed {
                base,
                label,
                bound,
                groups,
                projections,
                representatives,
            },
            report,
        )
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check_degree(&self, n: usize) {
        assert!(
            n <= self.bound,
            "quotient computed at bound {} does not cover degree {n}",
            self.bound
        );
    }
}

impl CrossedGroup for QuotientCrossed {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn group(&self, n: usize) -> Arc<FiniteGroup> {
        self.check_degree(n);
        self.groups[n].clone()
    }

    fn restrict(&self, phi: &IntervalMorphism, x: usize) -> usize {
        self.check_degree(phi.codomain());
        self.check_degree(phi.domain());
        let rep = self.representatives[phi.codomain()][x];
        self.projections[phi.domain()][self.base.restrict(phi, rep)]
    }

    fn signed_perm(&self, n: usize, x: usize) -> SignedPermutation {
        self.check_degree(n);
        self.base.signed_perm(n, self.representatives[n][x])
    }

    fn to_weyl(&self, n: usize, x: usize) -> WreathElem {
        self.check_degree(n);
        self.base.to_weyl(n, self.representatives[n][x])
    }

    fn describe(&self, n: usize, x: usize) -> String {
        format!("[{}]", self.base.describe(n, self.representatives[n][x]))
    }
}

/// Operadification: the K-family quotient. The input must lie over the
/// hyperoctahedral crossed interval group.
pub fn operadify(
    g: Arc<dyn CrossedGroup>,
    maxdeg: usize,
) -> Result<(QuotientCrossed, SubgroupFamily, Report), StructureError> {
    let over = lies_over(g.as_ref(), WeylSubfamily::Hyperoctahedral, maxdeg);
    if !over.passed() {
        return Err(StructureError::NotOverHyp(
            over.violations[0].witness.clone(),
        ));
    }
    let family = k_family(g.as_ref(), maxdeg);
    let closure = verify_family_closure(g.as_ref(), &family, "K");
    let label = format!("operadify({})", g.name());
    let (quotient, soundness) = QuotientCrossed::new(g, &family, label);
    let report = Report::merge(
        format!("operadify({})", quotient.base.name()),
        maxdeg,
        vec![closure, soundness],
    );
    Ok((quotient, family, report))
}

/// Taming: the L-family quotient. The input must lie over the symmetric
/// crossed interval group.
pub fn tame_quotient(
    g: Arc<dyn CrossedGroup>,
    maxdeg: usize,
) -> Result<(QuotientCrossed, SubgroupFamily, Report), StructureError> {
    let family = l_family(g.as_ref(), maxdeg)?;
    let closure = verify_family_closure(g.as_ref(), &family, "L");
    let label = format!("tame({})", g.name());
    let (quotient, soundness) = QuotientCrossed::new(g, &family, label);
    let report = Report::merge(
        format!("tame-quotient({})", quotient.base.name()),
        maxdeg,
        vec![closure, soundness],
    );
    Ok((quotient, family, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::{
        constant, hyperoctahedral, refl, symmetric, verify_crossed_axioms, CrossedGroup,
    };
    use crate::embed::psi_crossed;
    use crate::operad::{sym_operad, verify_group_operad, verify_operad_assoc};

    fn s3_constant() -> Arc<dyn CrossedGroup> {
        Arc::new(constant(FiniteGroup::symmetric(3), "constant-s3"))
    }

    #[test]
    fn hyperoctahedral_is_operadic() {
        let r = is_operadic(&hyperoctahedral(), 3, Exec::Parallel);
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn psi_sym_is_operadic_and_tame() {
        let p = psi_crossed(sym_operad(), 3);
        let r = is_operadic(&p, 3, Exec::Parallel);
        assert!(r.passed(), "{}", r.render_text());
        let r = is_tame(&p, 3, Exec::Parallel).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn constant_s3_is_neither_operadic_nor_tame() {
        let c = s3_constant();
        let r = is_operadic(c.as_ref(), 2, Exec::Parallel);
        assert!(!r.passed());
        assert!(r
            .violations
            .iter()
            .any(|v| v.law == "dissociated-commutator"));
        let r = is_tame(c.as_ref(), 2, Exec::Parallel).unwrap();
        assert!(!r.passed());
        assert!(r.violations.iter().any(|v| v.law == "tameness"));
    }

    #[test]
    fn constant_z2_is_operadic_and_tame() {
        let c = constant(FiniteGroup::cyclic(2), "constant-z2");
        assert!(is_operadic(&c, 3, Exec::Parallel).passed());
        assert!(is_tame(&c, 3, Exec::Parallel).unwrap().passed());
        // the resulting group operad composes by summing entries
        let op = group_operad_from_crossed(Arc::new(c), 3, Exec::Parallel).unwrap();
        let one: (usize, usize) = (1, 1);
        let zero1: (usize, usize) = (1, 0);
        assert_eq!(op.gamma(&one, &[one]), (1, 0));
        assert_eq!(op.gamma(&one, &[zero1]), (1, 1));
        let two_one: (usize, usize) = (2, 1);
        assert_eq!(op.gamma(&two_one, &[one, zero1]), (2, 0));
        let r = verify_group_operad(&op, 3, 1, Exec::Parallel);
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn refusals_name_the_failed_condition() {
        // refl fails inert-triviality (and is not over sym)
        let r: Arc<dyn CrossedGroup> = Arc::new(refl());
        match group_operad_from_crossed(r.clone(), 2, Exec::Parallel) {
            Err(StructureError::NotOverSym(_)) => {}
            other => panic!("expected refusal, got {other:?}"),
        }
        match operadify(r, 2) {
            Err(StructureError::NotOverHyp(_)) => {}
            other => panic!("expected refusal, got {other:?}"),
        }
        // hyperoctahedral is operadic but not over sym
        let h: Arc<dyn CrossedGroup> = Arc::new(hyperoctahedral());
        match group_operad_from_crossed(h, 2, Exec::Parallel) {
            Err(StructureError::NotOverSym(_)) => {}
            other => panic!("expected refusal, got {other:?}"),
        }
        // constant S3 is over sym but not tame
        match group_operad_from_crossed(s3_constant(), 2, Exec::Parallel) {
            Err(StructureError::NotTame(_)) | Err(StructureError::NotOperadic(_)) => {}
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    /// The operad generated by the hyperoctahedral crossed interval group
    /// is associative at total degree ≤ 3.
    #[test]
    fn operad_from_hyperoctahedral_associative() {
        let h: Arc<dyn CrossedGroup> = Arc::new(hyperoctahedral());
        let op = operad_from_crossed(h, 3, Exec::Parallel).unwrap();
        let r = verify_operad_assoc(&op, 3, 1, Exec::Parallel);
        assert!(r.passed(), "{}", r.render_text());
        // γ(e; e, …, e) = e
        let e2 = op.base(2);
        let e1 = op.base(1);
        assert_eq!(op.gamma(&e2, &[e1, e1]), op.base(2));
    }

    /// Round trip: the operad of the crossed structure of the symmetric
    /// operad is the symmetric operad, elementwise.
    #[test]
    fn round_trip_sym() {
        let p: Arc<dyn CrossedGroup> = Arc::new(psi_crossed(sym_operad(), 3));
        let op = group_operad_from_crossed(p, 3, Exec::Parallel).unwrap();
        let s = sym_operad();
        // inputs of arity ≤ 3 at outer arity ≤ 3 reach total degree 9
        let perms: Vec<Vec<Permutation>> = (0..=9).map(Permutation::all).collect();
        for n in 0..=3usize {
            for ks in bounded_tuples(n, 3) {
                for (xi, x) in perms[n].iter().enumerate() {
                    let index_lists: Vec<Vec<usize>> =
                        ks.iter().map(|&k| (0..perms[k].len()).collect()).collect();
                    for tuple in crate::util::product_lists(&index_lists) {
                        let inputs_idx: Vec<(usize, usize)> = tuple
                            .iter()
                            .zip(ks.iter())
                            .map(|(&i, &k)| (k, i))
                            .collect();
                        let inputs: Vec<Permutation> = tuple
                            .iter()
                            .zip(ks.iter())
                            .map(|(&i, &k)| perms[k][i].clone())
                            .collect();
                        let (total, res) = op.gamma(&(n, xi), &inputs_idx);
                        assert_eq!(perms[total][res], s.gamma(x, &inputs));
                    }
                }
            }
        }
    }

    #[test]
    fn k_family_results() {
        // K of the hyperoctahedral group is trivial; operadify is identity
        let h: Arc<dyn CrossedGroup> = Arc::new(hyperoctahedral());
        let fam = k_family(h.as_ref(), 3);
        assert!(fam.is_trivial());
        let (q, _, report) = operadify(h.clone(), 3).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        for n in 0..=3 {
            assert_eq!(q.order(n), h.order(n));
        }
        // K of constant S3 is A3 at every degree; operadify has order 2
        let c = s3_constant();
        let fam = k_family(c.as_ref(), 3);
        for n in 0..=3 {
            assert_eq!(fam.order(n), 3, "degree {n}");
        }
        let (q, _, report) = operadify(c, 3).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        for n in 0..=3 {
            assert_eq!(q.order(n), 2);
        }
        let r = is_operadic(&q, 3, Exec::Parallel);
        assert!(r.passed(), "{}", r.render_text());
        let r = verify_crossed_axioms(&q, 3, Exec::Parallel);
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn l_family_results() {
        // L of the symmetric crossed interval group is trivial
        let s: Arc<dyn CrossedGroup> = Arc::new(symmetric());
        let fam = l_family(s.as_ref(), 3).unwrap();
        assert!(fam.is_trivial());
        let (q, _, report) = tame_quotient(s.clone(), 3).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        for n in 0..=3 {
            assert_eq!(q.order(n), s.order(n));
        }
        // L of constant S3 is the commutator family; taming abelianizes
        let c = s3_constant();
        let (q, fam, report) = tame_quotient(c, 3).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        for n in 0..=3 {
            assert_eq!(fam.order(n), 3);
            assert_eq!(q.order(n), 2);
        }
        let r = is_tame(&q, 3, Exec::Parallel).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let r = verify_crossed_axioms(&q, 3, Exec::Parallel);
        assert!(r.passed(), "{}", r.render_text());
    }

    /// Operadification and taming commute on the constant S3 fixture: both
    /// composites give the degreewise order-2 quotient.
    #[test]
    fn operadify_and_taming_commute_on_s3() {
        let c = s3_constant();
        let (k_then, _, _) = operadify(c.clone(), 2).unwrap();
        let (kt, _, _) = tame_quotient(Arc::new(k_then) as Arc<dyn CrossedGroup>, 2).unwrap();
        let (t_then, _, _) = tame_quotient(c, 2).unwrap();
        let (tk, _, _) = operadify(Arc::new(t_then) as Arc<dyn CrossedGroup>, 2).unwrap();
        for n in 0..=2 {
            assert_eq!(kt.order(n), 2);
            assert_eq!(tk.order(n), 2);
            assert_eq!(*kt.group(n), *tk.group(n));
        }
    }

    /// The crossed structure of the generated operad returns the original
    /// crossed interval group elementwise.
    #[test]
    fn psi_of_generated_operad_recovers_input() {
        let base: Arc<dyn CrossedGroup> = Arc::new(symmetric());
        let op = group_operad_from_crossed(base.clone(), 3, Exec::Parallel).unwrap();
        let p = psi_crossed(op, 3);
        for n in 0..=3usize {
            assert_eq!(p.order(n), base.order(n));
            for m in 0..=3usize {
                for phi in hom_enumerate(m, n) {
                    for x in 0..base.order(n) {
                        // elements of the generated operad are (degree, index)
                        // pairs indexed compatibly with the base
                        let xi = p.index_of(n, &(n, x));
                        let ri = p.restrict(&phi, xi);
                        assert_eq!(p.elem(m, ri), (m, base.restrict(&phi, x)));
                    }
                    for x in 0..base.order(n) {
                        let xi = p.index_of(n, &(n, x));
                        assert_eq!(p.signed_perm(n, xi), base.signed_perm(n, x));
                    }
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "does not cover degree")]
    fn quotient_refuses_degrees_beyond_bound() {
        let c = s3_constant();
        let (q, _, _) = operadify(c, 2).unwrap();
        let _ = q.group(3);
    }
}
