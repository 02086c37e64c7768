//! Group-class predicates.
//!
//! Every class with more than one known characterization is evaluated along
//! each of them, and a disagreement is reported as
//! [`Error::RouteDisagreement`]:
//!
//! * supersoluble: chief factors of prime order, versus solubility plus
//!   `G/F_p(G)` abelian of exponent dividing `p − 1` for every `p ∈ π(G)`;
//! * strongly supersoluble: supersoluble with submodular Sylow subgroups,
//!   versus supersoluble with `G/F(G)` abelian of squarefree exponent, versus
//!   `G/F_p(G)` abelian of squarefree exponent dividing `p − 1` for every `p`;
//! * submodular Sylow subgroups (`smU`): the definition, versus `G/F_p(G)`
//!   soluble with every Sylow subgroup abelian of squarefree exponent
//!   dividing `p − 1`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::modularity;
use crate::util;

#[derive(Default)]
pub(crate) struct ClassCache {
    soluble: OnceLock<bool>,
    metanilpotent: OnceLock<bool>,
    supersoluble: OnceLock<bool>,
    strongly_supersoluble: OnceLock<bool>,
    sylows_submodular: OnceLock<bool>,
    sm_u: OnceLock<bool>,
    w_u: OnceLock<bool>,
    fitting: OnceLock<SubgroupId>,
}

fn cached<T: Copy>(cell: &OnceLock<T>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    if let Some(v) = cell.get() {
        return Ok(*v);
    }
    let v = f()?;
    Ok(*cell.get_or_init(|| v))
}

fn cache(lat: &SubgroupLattice) -> &ClassCache {
    &lat.caches.classes
}

pub fn is_abelian(lat: &SubgroupLattice) -> bool {
    lat.group().is_abelian()
}

/// Abelian of squarefree exponent.
pub fn is_in_b(lat: &SubgroupLattice) -> bool {
    is_abelian(lat) && util::is_squarefree(lat.group().exponent())
}

/// Abelian of exponent dividing `p − 1`.
pub fn is_in_a(lat: &SubgroupLattice, p: usize) -> bool {
    is_abelian(lat) && (p - 1) % lat.group().exponent() == 0
}

fn is_in_a_and_b(lat: &SubgroupLattice, p: usize) -> bool {
    is_in_a(lat, p) && is_in_b(lat)
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(lat: &SubgroupLattice) -> bool {
    lat.group()
        .primes()
        .into_iter()
        .all(|p| lat.is_normal(lat.sylow(p)))
}

pub fn derived_series(lat: &SubgroupLattice) -> Vec<SubgroupId> {
    let mut series = vec![lat.top()];
    loop {
        let last = *series.last().expect("nonempty");
        let next = lat.derived(last);
        if next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_soluble(lat: &SubgroupLattice) -> bool {
    cached(&cache(lat).soluble, || {
        Ok(*derived_series(lat).last().expect("nonempty") == lat.bottom())
    })
    .expect("infallible")
}

pub fn fitting(lat: &SubgroupLattice) -> Result<SubgroupId> {
    cached(&cache(lat).fitting, || lat.fitting())
}

/// `G/F(G)` is nilpotent.
pub fn is_metanilpotent(lat: &SubgroupLattice) -> Result<bool> {
    cached(&cache(lat).metanilpotent, || {
        let q = lat.quotient(fitting(lat)?)?;
        Ok(is_nilpotent(&q.lattice))
    })
}

/// `G` has a normal subgroup of order `|G|_{p'}`.
pub fn is_p_nilpotent(lat: &SubgroupLattice, p: usize) -> bool {
    lat.is_p_nilpotent_subgroup(lat.top(), p)
}

pub fn supersoluble_by_chief_series(lat: &SubgroupLattice) -> Result<bool> {
    Ok(lat
        .chief_series()?
        .factors
        .iter()
        .all(|f| f.is_prime_order))
}

pub fn supersoluble_by_screen(lat: &SubgroupLattice) -> Result<bool> {
    if !is_soluble(lat) {
        return Ok(false);
    }
    for p in lat.group().primes() {
        let q = lat.quotient(lat.p_nilpotent_radical(p)?)?;
        if !is_in_a(&q.lattice, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn disagree(predicate: &'static str, routes: &[(&str, bool)]) -> Error {
    let routes = routes
        .iter()
        .map(|(name, v)| format!("{name}={v}"))
        .collect::<Vec<_>>()
        .join(", ");
    Error::RouteDisagreement { predicate, routes }
}

pub fn is_supersoluble(lat: &SubgroupLattice) -> Result<bool> {
    cached(&cache(lat).supersoluble, || {
        let by_series = supersoluble_by_chief_series(lat)?;
        let by_screen = supersoluble_by_screen(lat)?;
        if by_series != by_screen {
            return Err(disagree(
                "supersoluble",
                &[("chief-series", by_series), ("screen", by_screen)],
            ));
        }
        Ok(by_series)
    })
}

/// Submodularity verdict for every Sylow subgroup. All members of a
/// conjugacy class must agree.
pub fn sylows_submodular(lat: &SubgroupLattice) -> Result<bool> {
    cached(&cache(lat).sylows_submodular, || {
        let mut all = true;
        for p in lat.group().primes() {
            let rep = modularity::is_submodular(lat, lat.sylow(p));
            for s in lat.sylow_all(p) {
                if modularity::is_submodular(lat, s) != rep {
                    return Err(Error::Consistency(format!(
                        "conjugate Sylow {p}-subgroups disagree on submodularity"
                    )));
                }
            }
            all &= rep;
        }
        Ok(all)
    })
}

pub fn strongly_supersoluble_by_definition(lat: &SubgroupLattice) -> Result<bool> {
    Ok(is_supersoluble(lat)? && sylows_submodular(lat)?)
}

pub fn strongly_supersoluble_by_fitting_quotient(lat: &SubgroupLattice) -> Result<bool> {
    if !is_supersoluble(lat)? {
        return Ok(false);
    }
    let q = lat.quotient(fitting(lat)?)?;
    Ok(is_in_b(&q.lattice))
}

pub fn strongly_supersoluble_by_screen(lat: &SubgroupLattice) -> Result<bool> {
    for p in lat.group().primes() {
        let q = lat.quotient(lat.p_nilpotent_radical(p)?)?;
        if !is_in_a_and_b(&q.lattice, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_strongly_supersoluble(lat: &SubgroupLattice) -> Result<bool> {
    cached(&cache(lat).strongly_supersoluble, || {
        let by_def = strongly_supersoluble_by_definition(lat)?;
        let by_fit = strongly_supersoluble_by_fitting_quotient(lat)?;
        let by_screen = strongly_supersoluble_by_screen(lat)?;
        if by_def != by_fit || by_def != by_screen {
            return Err(disagree(
                "strongly supersoluble",
                &[
                    ("definition", by_def),
                    ("fitting-quotient", by_fit),
                    ("screen", by_screen),
                ],
            ));
        }
        Ok(by_def)
    })
}

/// Every Sylow subgroup of `lat`'s group satisfies `pred`.
fn sylows_satisfy(lat: &SubgroupLattice, pred: impl Fn(SubgroupId, usize) -> bool) -> bool {
    lat.group()
        .primes()
        .into_iter()
        .all(|q| pred(lat.sylow(q), q))
}

pub fn sm_u_by_screen(lat: &SubgroupLattice) -> Result<bool> {
    for p in lat.group().primes() {
        let q = lat.quotient(lat.p_nilpotent_radical(p)?)?;
        let ql = &q.lattice;
        let ok = is_soluble(ql)
            && sylows_satisfy(ql, |s, _| {
                let e = ql.exponent_of(s);
                ql.is_abelian_subgroup(s) && (p - 1) % e == 0 && util::is_squarefree(e)
            });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every Sylow subgroup is submodular.
pub fn is_sm_u(lat: &SubgroupLattice) -> Result<bool> {
    cached(&cache(lat).sm_u, || {
        let by_def = sylows_submodular(lat)?;
        let by_screen = sm_u_by_screen(lat)?;
        if by_def != by_screen {
            return Err(disagree(
                "submodular Sylow subgroups",
                &[("definition", by_def), ("screen", by_screen)],
            ));
        }
        Ok(by_def)
    })
}

/// Every Sylow subgroup is P-subnormal (prime-index chain to the top).
pub fn is_w_u(lat: &SubgroupLattice) -> bool {
    cached(&cache(lat).w_u, || {
        Ok(lat.group().primes().into_iter().all(|p| {
            lat.sylow_all(p)
                .into_iter()
                .all(|s| modularity::is_p_subnormal(lat, s))
        }))
    })
    .expect("infallible")
}

/// With `p₁ > p₂ > …` the primes of `|G|`, the normal subgroups of order
/// `p₁^{n₁}…p_i^{n_i}` for each `i`, or `None` if one is missing.
pub fn ore_chain(lat: &SubgroupLattice) -> Option<Vec<SubgroupId>> {
    let order = lat.group().order();
    let mut primes = lat.group().primes();
    primes.reverse();
    let mut target = 1;
    let mut chain = Vec::new();
    for p in primes {
        target *= util::p_part(order, p);
        let n = lat
            .normal_subgroups()
            .into_iter()
            .find(|&n| lat.order(n) == target)?;
        chain.push(n);
    }
    Some(chain)
}

pub fn is_ore_dispersive(lat: &SubgroupLattice) -> bool {
    ore_chain(lat).is_some()
}

/// Every Sylow subgroup is elementary abelian.
pub fn has_elementary_abelian_sylows(lat: &SubgroupLattice) -> bool {
    sylows_satisfy(lat, |s, q| lat.is_abelian_subgroup(s) && q % lat.exponent_of(s) == 0)
}

/// A class of groups, as used by residuals and minimal-non searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupClass {
    Abelian,
    /// Abelian of squarefree exponent.
    B,
    /// Abelian of exponent dividing `p − 1`.
    A(usize),
    Nilpotent,
    Soluble,
    Metanilpotent,
    PNilpotent(usize),
    Supersoluble,
    StronglySupersoluble,
    /// All Sylow subgroups submodular.
    SmU,
    /// All Sylow subgroups P-subnormal.
    WU,
    OreDispersive,
    /// All Sylow subgroups elementary abelian.
    ElementaryAbelianSylows,
    /// Soluble with all Sylow subgroups elementary abelian.
    SolubleElementaryAbelianSylows,
    /// Soluble with all Sylow subgroups abelian of squarefree exponent
    /// dividing `p − 1`.
    SolubleSylowsInAB(usize),
}

impl GroupClass {
    pub fn contains(&self, lat: &SubgroupLattice) -> Result<bool> {
        Ok(match *self {
            GroupClass::Abelian => is_abelian(lat),
            GroupClass::B => is_in_b(lat),
            GroupClass::A(p) => is_in_a(lat, p),
            GroupClass::Nilpotent => is_nilpotent(lat),
            GroupClass::Soluble => is_soluble(lat),
            GroupClass::Metanilpotent => is_metanilpotent(lat)?,
            GroupClass::PNilpotent(p) => is_p_nilpotent(lat, p),
            GroupClass::Supersoluble => is_supersoluble(lat)?,
            GroupClass::StronglySupersoluble => is_strongly_supersoluble(lat)?,
            GroupClass::SmU => is_sm_u(lat)?,
            GroupClass::WU => is_w_u(lat),
            GroupClass::OreDispersive => is_ore_dispersive(lat),
            GroupClass::ElementaryAbelianSylows => has_elementary_abelian_sylows(lat),
            GroupClass::SolubleElementaryAbelianSylows => {
                is_soluble(lat) && has_elementary_abelian_sylows(lat)
            }
            GroupClass::SolubleSylowsInAB(p) => {
                is_soluble(lat)
                    && sylows_satisfy(lat, |s, _| {
                        let e = lat.exponent_of(s);
                        lat.is_abelian_subgroup(s) && (p - 1) % e == 0 && util::is_squarefree(e)
                    })
            }
        })
    }

    pub fn name(&self) -> String {
        match self {
            GroupClass::A(p) => format!("A({})", p - 1),
            GroupClass::PNilpotent(p) => format!("{p}-nilpotent"),
            GroupClass::SolubleSylowsInAB(p) => format!("soluble, Sylows in A({})∩B", p - 1),
            other => format!("{other:?}"),
        }
    }
}

/// Smallest normal subgroup with quotient in `class`: the intersection of all
/// normal subgroups whose quotient lies in the class. Fails if that
/// intersection's own quotient is outside the class, which would mean the
/// class is not closed under subdirect products on this group.
pub fn class_residual(lat: &SubgroupLattice, class: GroupClass) -> Result<SubgroupId> {
    let mut residual = lat.top();
    for n in lat.normal_subgroups() {
        if class.contains(&lat.quotient(n)?.lattice)? {
            residual = lat.meet(residual, n);
        }
    }
    if !class.contains(&lat.quotient(residual)?.lattice)? {
        return Err(Error::Consistency(format!(
            "quotient by the {}-residual is outside the class",
            class.name()
        )));
    }
    Ok(residual)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub generators: Vec<String>,
}

impl SubgroupInfo {
    pub fn new(lat: &SubgroupLattice, h: SubgroupId) -> Self {
        Self {
            order: lat.order(h),
            generators: lat
                .generators(h)
                .iter()
                .map(|&g| lat.group().element(g).to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFlag {
    pub prime: usize,
    pub value: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorInfo {
    pub lower_order: usize,
    pub upper_order: usize,
    pub order: usize,
    pub prime: Option<usize>,
    pub centralizer_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowInfo {
    pub prime: usize,
    pub subgroup: SubgroupInfo,
    pub conjugates: usize,
    /// Shortest submodular chain as subgroup orders and generators; `None`
    /// when the subgroup is not submodular.
    pub submodular_chain: Option<Vec<SubgroupInfo>>,
    pub kp_subnormal: bool,
    pub p_subnormal: bool,
}

/// Every class predicate for one group, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub group: String,
    pub order: usize,
    pub degree: usize,
    pub primes: Vec<usize>,
    pub subgroup_count: usize,
    pub abelian: bool,
    pub in_b: bool,
    pub in_a: Vec<PrimeFlag>,
    pub nilpotent: bool,
    pub soluble: bool,
    pub metanilpotent: bool,
    pub p_nilpotent: Vec<PrimeFlag>,
    pub supersoluble: bool,
    pub strongly_supersoluble: bool,
    pub sm_u: bool,
    pub w_u: bool,
    pub ore_dispersive: bool,
    pub ore_chain: Option<Vec<SubgroupInfo>>,
    pub fitting: SubgroupInfo,
    pub frattini: SubgroupInfo,
    pub chief_series: Vec<FactorInfo>,
    pub sylows: Vec<SylowInfo>,
}

impl ClassReport {
    pub fn build(name: &str, lat: &SubgroupLattice) -> Result<ClassReport> {
        let g = lat.group();
        let primes = g.primes();
        let chief = lat.chief_series()?;
        let chain_info = |chain: &[SubgroupId]| chain.iter().map(|&h| SubgroupInfo::new(lat, h)).collect();
        let sylows = primes
            .iter()
            .map(|&p| {
                let s = lat.sylow(p);
                SylowInfo {
                    prime: p,
                    subgroup: SubgroupInfo::new(lat, s),
                    conjugates: lat.sylow_all(p).len(),
                    submodular_chain: modularity::submodular_chain(lat, s).map(|c| chain_info(&c.chain)),
                    kp_subnormal: modularity::is_kp_subnormal(lat, s),
                    p_subnormal: modularity::is_p_subnormal(lat, s),
                }
            })
            .collect();
        Ok(ClassReport {
            group: name.to_string(),
            order: g.order(),
            degree: g.degree(),
            primes: primes.clone(),
            subgroup_count: lat.len(),
            abelian: is_abelian(lat),
            in_b: is_in_b(lat),
            in_a: primes
                .iter()
                .map(|&p| PrimeFlag { prime: p, value: is_in_a(lat, p) })
                .collect(),
            nilpotent: is_nilpotent(lat),
            soluble: is_soluble(lat),
            metanilpotent: is_metanilpotent(lat)?,
            p_nilpotent: primes
                .iter()
                .map(|&p| PrimeFlag { prime: p, value: is_p_nilpotent(lat, p) })
                .collect(),
            supersoluble: is_supersoluble(lat)?,
            strongly_supersoluble: is_strongly_supersoluble(lat)?,
            sm_u: is_sm_u(lat)?,
            w_u: is_w_u(lat),
            ore_dispersive: is_ore_dispersive(lat),
            ore_chain: ore_chain(lat).map(|c| chain_info(&c)),
            fitting: SubgroupInfo::new(lat, fitting(lat)?),
            frattini: SubgroupInfo::new(lat, lat.frattini()),
            chief_series: chief
                .factors
                .iter()
                .map(|f| FactorInfo {
                    lower_order: lat.order(f.lower),
                    upper_order: lat.order(f.upper),
                    order: f.order,
                    prime: f.prime,
                    centralizer_order: lat.order(f.centralizer),
                })
                .collect(),
            sylows,
        })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;
    use crate::group::DEFAULT_ELEMENT_CAP;

    fn lattice(spec: crate::groupspec::GroupSpec) -> SubgroupLattice {
        SubgroupLattice::new(Arc::new(spec.close(DEFAULT_ELEMENT_CAP).unwrap())).unwrap()
    }

    #[test]
    fn class_b() {
        assert!(!is_in_b(&lattice(catalog::cyclic(4))));
        assert!(is_in_b(&lattice(catalog::cyclic(6))));
        assert!(!is_in_b(&lattice(catalog::symmetric(3))));
    }

    #[test]
    fn class_a() {
        let z16 = lattice(catalog::cyclic(16));
        assert!(is_in_a(&z16, 17));
        assert!(!is_in_a(&z16, 5));
        let z1 = lattice(catalog::cyclic(1));
        for p in [2, 3, 5, 7] {
            assert!(is_in_a(&z1, p));
        }
    }

    #[test]
    fn nilpotency_and_solubility() {
        assert!(is_nilpotent(&lattice(catalog::dicyclic(2))));
        let a5 = lattice(catalog::alternating(5));
        assert!(!is_soluble(&a5));
        let s3 = lattice(catalog::symmetric(3));
        assert!(is_metanilpotent(&s3).unwrap());
        assert!(is_p_nilpotent(&s3, 2));
        assert!(!is_p_nilpotent(&s3, 3));
    }

    #[test]
    fn supersolubility() {
        assert!(!is_supersoluble(&lattice(catalog::symmetric(4))).unwrap());
        assert!(is_supersoluble(&lattice(catalog::symmetric(3))).unwrap());
        assert!(is_supersoluble(&lattice(catalog::affine_group(17, 16).unwrap())).unwrap());
    }

    #[test]
    fn strong_supersolubility() {
        assert!(!is_strongly_supersoluble(&lattice(catalog::affine_group(17, 16).unwrap())).unwrap());
        assert!(is_strongly_supersoluble(&lattice(catalog::symmetric(3))).unwrap());
        for spec in [catalog::dicyclic(4), catalog::dihedral(16), catalog::cyclic(24)] {
            assert!(is_strongly_supersoluble(&lattice(spec)).unwrap());
        }
    }

    #[test]
    fn submodular_sylows() {
        assert!(!is_sm_u(&lattice(catalog::alternating(4))).unwrap());
        let agl = lattice(catalog::affine_group(17, 16).unwrap());
        assert!(is_w_u(&agl));
        assert!(!is_sm_u(&agl).unwrap());
        let s3z5 = lattice(catalog::symmetric(3).product(&catalog::cyclic(5), "S3xZ5"));
        assert!(is_sm_u(&s3z5).unwrap());
    }

    #[test]
    fn ore_dispersion() {
        let s3 = lattice(catalog::symmetric(3));
        let chain = ore_chain(&s3).unwrap();
        assert_eq!(chain.iter().map(|&h| s3.order(h)).collect::<Vec<_>>(), vec![3, 6]);
        assert!(!is_ore_dispersive(&lattice(catalog::alternating(4))));
        assert!(is_ore_dispersive(&lattice(catalog::dihedral(16))));
    }

    #[test]
    fn residuals() {
        let z4 = lattice(catalog::cyclic(4));
        assert_eq!(z4.order(class_residual(&z4, GroupClass::B).unwrap()), 2);
        let z6 = lattice(catalog::cyclic(6));
        assert_eq!(class_residual(&z6, GroupClass::B).unwrap(), z6.bottom());
        let s3z5 = lattice(catalog::symmetric(3).product(&catalog::cyclic(5), "S3xZ5"));
        let r = class_residual(&s3z5, GroupClass::ElementaryAbelianSylows).unwrap();
        assert!(s3z5.is_nilpotent_subgroup(r));
    }

    #[test]
    fn trivial_group_report() {
        let z1 = lattice(catalog::cyclic(1));
        let r = ClassReport::build("Z1", &z1).unwrap();
        assert!(r.abelian && r.in_b && r.nilpotent && r.soluble && r.metanilpotent);
        assert!(r.supersoluble && r.strongly_supersoluble && r.sm_u && r.w_u && r.ore_dispersive);
        assert!(r.sylows.is_empty());
    }
}
