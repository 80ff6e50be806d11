use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::Algebra;
use super::{Element, MonomialOrder};
use crate::coeff::{Coeff, CoeffRing, RingMap, SigmaDerivation};
use crate::random::{random_coeff, random_nonzero_coeff};

/// `x_j x_i = constant * x_i x_j + tail_constant + sum_k tail_linear[k] * x_k`
/// for a pair `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub constant: Coeff,
    pub tail_constant: Coeff,
    pub tail_linear: Vec<Coeff>,
}

impl PairRelation {
    /// `x_j x_i = x_i x_j`
    pub fn commuting(ring: &CoeffRing, n: usize) -> Self {
        PairRelation {
            constant: ring.one(),
            tail_constant: ring.zero(),
            tail_linear: vec![ring.zero(); n],
        }
    }

    pub fn scaled(constant: Coeff, n: usize) -> Self {
        let ring = constant.ring();
        PairRelation {
            tail_constant: ring.zero(),
            tail_linear: vec![ring.zero(); n],
            constant,
        }
    }

    pub fn has_tail(&self) -> bool {
        !self.tail_constant.is_zero() || self.tail_linear.iter().any(|c| !c.is_zero())
    }
}

/// The defining data of a skew PBW extension: coefficient ring, variables,
/// twisting maps per variable and the pairwise commutation relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub ring: CoeffRing,
    pub var_names: Vec<String>,
    /// Named rational constants usable in expressions.
    pub params: BTreeMap<String, BigRational>,
    pub sigma: Vec<RingMap>,
    pub delta: Vec<SigmaDerivation>,
    /// Keyed by `(i, j)` with `i < j`; every pair is present.
    pub relations: BTreeMap<(usize, usize), PairRelation>,
    pub order: MonomialOrder,
}

impl AlgebraSpec {
    /// Commuting variables with trivial twisting, deglex order.
    pub fn new<S: Into<String>>(ring: CoeffRing, var_names: impl IntoIterator<Item = S>) -> Self {
        let var_names: Vec<String> = var_names.into_iter().map(Into::into).collect();
        let n = var_names.len();
        let sigma: Vec<RingMap> = (0..n).map(|_| RingMap::identity(&ring)).collect();
        let delta = sigma
            .iter()
            .map(|s| SigmaDerivation::zero(&ring, s.clone()))
            .collect();
        let mut relations = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                relations.insert((i, j), PairRelation::commuting(&ring, n));
            }
        }
        AlgebraSpec {
            ring,
            var_names,
            params: BTreeMap::new(),
            sigma,
            delta,
            relations,
            order: MonomialOrder::deglex(n),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    /// Sets `x_i r = sigma(r) x_i + delta(r)` from generator images.
    pub fn with_twist(
        mut self,
        i: usize,
        sigma_images: Vec<Coeff>,
        delta_images: Vec<Coeff>,
    ) -> Result<Self, crate::coeff::CoeffError> {
        let sigma = RingMap::new(&self.ring, sigma_images)?;
        let delta = SigmaDerivation::new(&self.ring, sigma.clone(), delta_images)?;
        self.sigma[i] = sigma;
        self.delta[i] = delta;
        Ok(self)
    }

    /// Sets the relation for the pair `i < j`.
    pub fn with_relation(mut self, i: usize, j: usize, rel: PairRelation) -> Self {
        assert!(i < j, "pair relations are keyed by i < j");
        self.relations.insert((i, j), rel);
        self
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn relation(&self, i: usize, j: usize) -> &PairRelation {
        &self.relations[&(i, j)]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    /// True when `sigma_i(r) = r` and `delta_i(r) = 0` for every variable.
    pub fn is_constant(&self, r: &Coeff) -> bool {
        self.sigma.iter().all(|s| s.apply(r) == *r) && self.delta.iter().all(|d| d.apply(r).is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// Counts, ring membership, names and order are consistent.
    WellFormed,
    /// Every commutation constant `c_ij` is nonzero.
    NonzeroPairConstant,
    /// Relation tails lie in `R + R x_1 + ... + R x_n`.
    TailDegree,
    /// Each twisting map is an endomorphism.
    Endomorphism,
    /// Each twisting map is injective (probed).
    Injective,
    /// Each delta satisfies the twisted Leibniz rule.
    SigmaLeibniz,
    /// Products of variables and coefficients associate.
    Associativity,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::WellFormed => "well-formed data",
            Condition::NonzeroPairConstant => "nonzero pair constant c_ij",
            Condition::TailDegree => "relation tail of degree at most one",
            Condition::Endomorphism => "sigma is a ring endomorphism",
            Condition::Injective => "sigma is injective",
            Condition::SigmaLeibniz => "delta is a sigma-derivation",
            Condition::Associativity => "associativity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationFailure {
    pub condition: Condition,
    pub detail: String,
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn violates(&self, c: Condition) -> bool {
        self.failures.iter().any(|f| f.condition == c)
    }

    fn fail(&mut self, condition: Condition, detail: impl Into<String>) {
        self.failures.push(ValidationFailure {
            condition,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("ok");
        }
        for (k, fail) in self.failures.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{fail}")?;
        }
        Ok(())
    }
}

const PROBE_SEED: u64 = 0x5eed_0fb1;
const LAW_SAMPLES: usize = 24;
const INJECTIVITY_SAMPLES: usize = 100;
const ASSOC_SAMPLES: usize = 4;

/// Runs the structural checks and randomized probes. Never panics on
/// malformed data: problems are reported, and the associativity probe only
/// runs once the cheaper checks pass.
pub fn validate_spec(spec: &AlgebraSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    check_well_formed(spec, &mut report);
    if !report.passed() {
        return report;
    }
    let ring = &spec.ring;
    let n = spec.num_vars();

    for (&(i, j), rel) in &spec.relations {
        if rel.constant.is_zero() {
            report.fail(
                Condition::NonzeroPairConstant,
                format!(
                    "{}*{} has zero constant in front of {}*{}",
                    spec.var_names[j], spec.var_names[i], spec.var_names[i], spec.var_names[j]
                ),
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let gens = ring.generators().len();
    for i in 0..n {
        let name = &spec.var_names[i];
        let sigma = &spec.sigma[i];
        let delta = &spec.delta[i];
        for (k, img) in sigma.images().iter().enumerate() {
            if img.constant_value().is_some() {
                report.fail(
                    Condition::Injective,
                    format!(
                        "sigma for {name} sends {} to a constant",
                        ring.generators()[k]
                    ),
                );
            }
        }
        if report.violates(Condition::Injective) {
            continue;
        }
        if gens > 0 {
            let mut seen = HashSet::new();
            let mut inputs = HashSet::new();
            for _ in 0..INJECTIVITY_SAMPLES {
                let r = random_coeff(ring, &mut rng, 3);
                if !inputs.insert(r.clone()) {
                    continue;
                }
                if !seen.insert(sigma.apply(&r)) {
                    report.fail(
                        Condition::Injective,
                        format!("sigma for {name} collides on sampled inputs"),
                    );
                    break;
                }
            }
        }
        for _ in 0..LAW_SAMPLES {
            let r = random_coeff(ring, &mut rng, 2);
            let s = random_coeff(ring, &mut rng, 2);
            let rs = r.mul(&s);
            if sigma.apply(&rs) != sigma.apply(&r).mul(&sigma.apply(&s))
                || sigma.apply(&r.add(&s)) != sigma.apply(&r).add(&sigma.apply(&s))
            {
                report.fail(
                    Condition::Endomorphism,
                    format!("sigma for {name} fails on r = {r}, s = {s}"),
                );
                break;
            }
            let lhs = delta.apply(&rs);
            let rhs = sigma.apply(&r).mul(&delta.apply(&s)).add(&delta.apply(&r).mul(&s));
            if lhs != rhs || delta.apply(&r.add(&s)) != delta.apply(&r).add(&delta.apply(&s)) {
                report.fail(
                    Condition::SigmaLeibniz,
                    format!("delta for {name} fails on r = {r}, s = {s}"),
                );
                break;
            }
        }
    }
    if !report.passed() {
        return report;
    }

    let alg = Algebra::unchecked(spec.clone());
    let vars: Vec<Element> = (0..n).map(|i| Element::var(&alg, i)).collect();
    'triples: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = vars[a].mul(&vars[b]).mul(&vars[c]);
                let right = vars[a].mul(&vars[b].mul(&vars[c]));
                if left != right {
                    report.fail(
                        Condition::Associativity,
                        format!(
                            "({0}*{1})*{2} != {0}*({1}*{2})",
                            spec.var_names[a], spec.var_names[b], spec.var_names[c]
                        ),
                    );
                    break 'triples;
                }
            }
        }
    }
    let samples: Vec<(Element, Element)> = (0..ASSOC_SAMPLES)
        .map(|_| {
            (
                Element::constant(&alg, random_nonzero_coeff(ring, &mut rng, 2)),
                Element::constant(&alg, random_nonzero_coeff(ring, &mut rng, 2)),
            )
        })
        .collect();
    'coeffs: for (r, s) in &samples {
        for a in 0..n {
            if vars[a].mul(r).mul(s) != vars[a].mul(&r.mul(s)) {
                report.fail(
                    Condition::Associativity,
                    format!("({0}*r)*s != {0}*(r*s) for r = {r}, s = {s}", spec.var_names[a]),
                );
                break 'coeffs;
            }
            for b in 0..n {
                if vars[b].mul(&vars[a]).mul(r) != vars[b].mul(&vars[a].mul(r)) {
                    report.fail(
                        Condition::Associativity,
                        format!(
                            "({0}*{1})*r != {0}*({1}*r) for r = {r}",
                            spec.var_names[b], spec.var_names[a]
                        ),
                    );
                    break 'coeffs;
                }
            }
        }
    }
    report
}

fn check_well_formed(spec: &AlgebraSpec, report: &mut ValidationReport) {
    let n = spec.num_vars();
    let ring = &spec.ring;
    if n == 0 {
        report.fail(Condition::WellFormed, "no variables");
    }
    let mut names = HashSet::new();
    for name in spec.var_names.iter().chain(ring.generators()) {
        if !names.insert(name.as_str()) {
            report.fail(Condition::WellFormed, format!("name {name} used twice"));
        }
    }
    if matches!(ring, CoeffRing::Polynomial(g) if g.is_empty()) {
        report.fail(Condition::WellFormed, "polynomial ring without generators");
    }
    if spec.sigma.len() != n || spec.delta.len() != n {
        report.fail(Condition::WellFormed, "one sigma and one delta per variable");
        return;
    }
    for i in 0..n {
        let ok = spec.sigma[i].images().len() == ring.generators().len()
            && spec.sigma[i].images().iter().all(|c| ring.contains(c))
            && spec.delta[i].images().iter().all(|c| ring.contains(c))
            && spec.delta[i].twist() == &spec.sigma[i];
        if !ok {
            report.fail(
                Condition::WellFormed,
                format!("twisting data for {} is outside the ring", spec.var_names[i]),
            );
        }
    }
    let expected = n * n.saturating_sub(1) / 2;
    let keys_ok = spec.relations.len() == expected
        && spec.relations.keys().all(|&(i, j)| i < j && j < n);
    if !keys_ok {
        report.fail(Condition::WellFormed, "relations must cover every pair i < j");
    }
    for rel in spec.relations.values() {
        if rel.tail_linear.len() != n {
            report.fail(Condition::TailDegree, "tail has the wrong number of linear terms");
        }
        let in_ring = std::iter::once(&rel.constant)
            .chain(std::iter::once(&rel.tail_constant))
            .chain(&rel.tail_linear)
            .all(|c| ring.contains(c));
        if !in_ring {
            report.fail(Condition::WellFormed, "relation coefficient outside the ring");
        }
    }
    if spec.order.len() != n {
        report.fail(Condition::WellFormed, "monomial order has the wrong arity");
    }
}
