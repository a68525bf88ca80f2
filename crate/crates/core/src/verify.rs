//! Every identity the crate relies on, as a named and seedable check.
//!
//! A check runs over the knot corpus plus `count` pseudorandom braids drawn
//! from one seed, and produces a [`CheckReport`]. Operators live in a
//! [`Verifier`], so tests can swap in a corrupted matrix and watch the
//! relevant checks fail.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::burau::{
    alexander_det, alexander_trace_with, burau_generator, burau_image, delta_vector, r_small, AlexanderWeight, BurauVariant,
    SmallR,
};
use crate::error::Error;
use crate::exterior::{
    alexander_exterior, intertwining_violation, j_n_matrix, lg_product, product_factors, word_intertwining_violation,
    ExteriorPath, Intertwiner, IntertwinerKind, ProductFlavor,
};
use crate::links_gould::{mu21, mu31, r_lg21, s_lg31, specialize_operator, LgEngine, LgFlavor};
use crate::matrix::DenseMatrix;
use crate::scalar::{equal_up_to_unit, ExtScalar, LaurentHalf, Ring, Specialization, Unit};
use crate::tensor::{partial_trace_scalar, LocalOperator, TensorRep};

/// The closed braids every check runs on.
pub fn corpus() -> Vec<(&'static str, BraidWord)> {
    let entries: [(&str, usize, &str); 9] = [
        ("unknot", 1, ""),
        ("unknot_b2", 2, "1"),
        ("hopf", 2, "1 1"),
        ("trefoil", 2, "1 1 1"),
        ("figure_eight", 3, "1 -2 1 -2"),
        ("cinquefoil", 2, "1 1 1 1 1"),
        ("torus_3_4", 4, "1 2 3 1 2 3 1 2 3"),
        ("unlink_2", 2, ""),
        ("unlink_3", 3, ""),
    ];
    entries.iter().map(|&(name, n, w)| (name, BraidWord::parse(w, n).expect("corpus words are valid"))).collect()
}

macro_rules! check_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum CheckId { $($variant),* }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(CheckId::$variant => $name),* }
            }
        }

        impl FromStr for CheckId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($name => Ok(CheckId::$variant),)*
                    _ => Err(Error::UnknownCheck(s.to_string())),
                }
            }
        }
    };
}

check_ids! {
    YangBaxterR1 => "yang_baxter_r1",
    YangBaxterR3 => "yang_baxter_r3",
    YangBaxterLg21 => "yang_baxter_lg21",
    YangBaxterLg21Special => "yang_baxter_lg21_special",
    YangBaxterS31 => "yang_baxter_s31",
    BurauRelations => "burau_relations",
    DeltaFixed => "delta_fixed",
    AlexanderPaths => "alexander_paths",
    PartialTraceH => "partial_trace_h",
    PartialTraceMu21 => "partial_trace_mu21",
    PartialTraceMu31 => "partial_trace_mu31",
    IntertwineI21 => "intertwine_i21",
    IntertwineJ => "intertwine_j",
    IntertwineK => "intertwine_k",
    IntertwineI31 => "intertwine_i31",
    JMatrix => "j_matrix",
    Markov => "markov",
    Main21 => "main21",
    Main31 => "main31",
    Product21 => "product21",
    Product31 => "product31",
    FactorAlexander => "factor_alexander",
    ReductionT1 => "reduction_t1",
    Symmetry21 => "symmetry21",
    YVanishing => "y_vanishing",
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-check defaults: random word count, strand bound, length bound.
struct Defaults {
    count: usize,
    max_strands: usize,
    max_length: usize,
}

impl CheckId {
    fn defaults(self) -> Defaults {
        use CheckId::*;
        let (count, max_strands, max_length) = match self {
            YangBaxterR1 | YangBaxterR3 | YangBaxterLg21 | YangBaxterLg21Special | YangBaxterS31 => (0, 3, 0),
            BurauRelations => (0, 5, 0),
            JMatrix => (0, 8, 0),
            DeltaFixed => (25, 5, 12),
            AlexanderPaths => (50, 4, 10),
            PartialTraceH => (25, 4, 10),
            PartialTraceMu21 => (25, 4, 8),
            PartialTraceMu31 | Main31 | Product31 => (25, 3, 10),
            IntertwineI21 => (5, 4, 8),
            IntertwineJ | IntertwineK => (5, 5, 8),
            IntertwineI31 => (5, 3, 6),
            Markov => (0, 3, 8),
            Main21 => (50, 4, 12),
            Product21 => (25, 4, 12),
            FactorAlexander => (25, 3, 10),
            ReductionT1 | Symmetry21 | YVanishing => (0, 3, 8),
        };
        Defaults { count, max_strands, max_length }
    }

    /// Largest strand count a caller may request.
    fn strand_cap(self) -> usize {
        use CheckId::*;
        match self {
            PartialTraceMu31 | Main31 | Product31 | IntertwineI31 | Markov => 4,
            PartialTraceMu21 | IntertwineI21 | ReductionT1 | Symmetry21 | YVanishing => 5,
            JMatrix => 12,
            _ => 6,
        }
    }
}

pub const MAX_LENGTH_CAP: usize = 40;

/// Knobs for one check run. `None` fields fall back to the per-check default.
#[derive(Clone, Debug, Default)]
pub struct CheckParams {
    pub max_strands: Option<usize>,
    pub max_length: Option<usize>,
    pub seed: u64,
    pub count: Option<usize>,
    /// Run on this braid only instead of corpus plus random words.
    pub braid: Option<BraidWord>,
    /// Skip the corpus when false (ignored when `braid` is set).
    pub skip_corpus: bool,
}

impl CheckParams {
    pub fn seeded(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub max_strands: usize,
    pub max_length: usize,
    pub seed: u64,
    pub count: usize,
}

/// The unit relating the two sides of an up-to-unit identity for one braid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitRecord {
    pub case: String,
    pub sign: i8,
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub case: String,
    pub strands: Option<usize>,
    pub braid: Option<String>,
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub params: ReportParams,
    pub outcome: Outcome,
    pub cases: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub units: Vec<UnitRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Outcome of one case.
enum Case {
    Pass(Option<Unit>),
    Fail(String),
}

fn up_to_unit(lhs: &LaurentHalf, rhs: &LaurentHalf, what: &str) -> Case {
    match equal_up_to_unit(lhs, rhs) {
        Some(u) => Case::Pass(Some(u)),
        None => Case::Fail(format!("{what}: {lhs} is not a unit multiple of {rhs}")),
    }
}

fn exact<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T, what: &str) -> Case {
    if lhs == rhs {
        Case::Pass(None)
    } else {
        Case::Fail(format!("{what}: {lhs} != {rhs}"))
    }
}

/// First failure among several sub-checks of one case.
fn all_of(cases: impl IntoIterator<Item = Case>) -> Case {
    let mut unit = None;
    for c in cases {
        match c {
            Case::Fail(m) => return Case::Fail(m),
            Case::Pass(u) => unit = unit.or(u),
        }
    }
    Case::Pass(unit)
}

struct Labeled {
    label: String,
    braid: BraidWord,
}

/// Holds the operators under test.
pub struct Verifier {
    r1: LocalOperator<LaurentHalf>,
    r3: LocalOperator<LaurentHalf>,
    lg21: LocalOperator<ExtScalar>,
    lg21_special: LocalOperator<LaurentHalf>,
    s31: LocalOperator<LaurentHalf>,
    engine: LgEngine,
    alex_r1: TensorRep<LaurentHalf>,
    alex_r3: TensorRep<LaurentHalf>,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier {
    /// The printed operators.
    pub fn new() -> Self {
        Self::from_operators(r_small(SmallR::R1), r_small(SmallR::R3), r_lg21(), s_lg31())
    }

    /// Custom operators; the specialized `(2,1)` matrix is derived from `lg21`.
    pub fn from_operators(
        r1: LocalOperator<LaurentHalf>,
        r3: LocalOperator<LaurentHalf>,
        lg21: LocalOperator<ExtScalar>,
        s31: LocalOperator<LaurentHalf>,
    ) -> Self {
        let lg21_special = specialize_operator(&lg21, Specialization::T1ToInvT0);
        let engine = LgEngine::from_operators(lg21.clone(), lg21_special.clone(), s31.clone());
        Self {
            alex_r1: TensorRep::new(r1.clone()),
            alex_r3: TensorRep::new(r3.clone()),
            r1,
            r3,
            lg21,
            lg21_special,
            s31,
            engine,
        }
    }

    /// A copy with the `(2,1)` R-matrix replaced.
    pub fn with_lg21(&self, lg21: LocalOperator<ExtScalar>) -> Self {
        Self::from_operators(self.r1.clone(), self.r3.clone(), lg21, self.s31.clone())
    }

    /// A copy with the `(3,1)` R-matrix replaced.
    pub fn with_s31(&self, s31: LocalOperator<LaurentHalf>) -> Self {
        Self::from_operators(self.r1.clone(), self.r3.clone(), self.lg21.clone(), s31)
    }

    pub fn with_r1(&self, r1: LocalOperator<LaurentHalf>) -> Self {
        Self::from_operators(r1, self.r3.clone(), self.lg21.clone(), self.s31.clone())
    }

    pub fn engine(&self) -> &LgEngine {
        &self.engine
    }

    pub fn run(&self, id: CheckId, params: &CheckParams) -> Result<CheckReport, Error> {
        let start = Instant::now();
        let d = id.defaults();
        let max_strands = params.max_strands.unwrap_or(d.max_strands);
        let max_length = params.max_length.unwrap_or(d.max_length);
        let count = params.count.unwrap_or(d.count);
        if max_strands > id.strand_cap() {
            return Err(Error::OutOfBounds(format!("{id}: at most {} strands, got {max_strands}", id.strand_cap())));
        }
        if max_length > MAX_LENGTH_CAP {
            return Err(Error::OutOfBounds(format!("{id}: length at most {MAX_LENGTH_CAP}, got {max_length}")));
        }
        if let Some(b) = &params.braid {
            if b.strands() > id.strand_cap() {
                return Err(Error::OutOfBounds(format!("{id}: at most {} strands, got {}", id.strand_cap(), b.strands())));
            }
        }
        let report_params = ReportParams { max_strands, max_length, seed: params.seed, count };
        let braids = self.case_braids(id, params, max_strands, max_length, count);
        let (cases, units, counterexample) = self.evaluate(id, params.seed, max_strands, &braids);
        Ok(CheckReport {
            name: id.name().to_string(),
            params: report_params,
            outcome: if counterexample.is_none() { Outcome::Pass } else { Outcome::Fail },
            cases,
            units,
            counterexample,
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    }

    /// Every check in declaration order.
    pub fn run_suite(&self, params: &CheckParams) -> Result<Vec<CheckReport>, Error> {
        CheckId::ALL.iter().map(|&id| self.run(id, params)).collect()
    }

    fn case_braids(&self, id: CheckId, params: &CheckParams, max_strands: usize, max_length: usize, count: usize) -> Vec<Labeled> {
        if let Some(b) = &params.braid {
            return vec![Labeled { label: "input".into(), braid: b.clone() }];
        }
        if max_length == 0 && count == 0 && !uses_corpus(id) {
            return Vec::new();
        }
        let mut out = Vec::new();
        if !params.skip_corpus && uses_corpus(id) {
            for (name, b) in corpus() {
                if b.strands() <= id.strand_cap().min(max_strands.max(4)) {
                    out.push(Labeled { label: name.to_string(), braid: b });
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ hash_name(id.name()));
        let min_strands = if max_strands >= 2 { 2 } else { 1 };
        for k in 0..count {
            let n = rng.gen_range(min_strands..=max_strands.max(1));
            let len = rng.gen_range(0..=max_length);
            out.push(Labeled { label: format!("random#{k}"), braid: BraidWord::random_with(&mut rng, n, len) });
        }
        out
    }

    fn evaluate(&self, id: CheckId, seed: u64, max_strands: usize, braids: &[Labeled]) -> (usize, Vec<UnitRecord>, Option<Counterexample>) {
        use CheckId::*;
        let fail = |detail: String| Counterexample { case: "operator".into(), strands: None, braid: None, seed, detail };
        // operator-level checks
        let operator_result: Option<Result<(), String>> = match id {
            YangBaxterR1 => Some(yb(&self.r1)),
            YangBaxterR3 => Some(yb(&self.r3)),
            YangBaxterLg21 => Some(yb(&self.lg21)),
            YangBaxterLg21Special => Some(yb(&self.lg21_special)),
            YangBaxterS31 => Some(yb(&self.s31)),
            BurauRelations => Some(burau_relations(max_strands)),
            JMatrix => Some(j_matrix_checks(max_strands)),
            IntertwineI21 | IntertwineJ | IntertwineK | IntertwineI31 if braids.len() != 1 || braids[0].label != "input" => {
                Some(self.generator_intertwining(id, max_strands))
            }
            _ => None,
        };
        let mut cases = 0;
        if let Some(r) = operator_result {
            cases += 1;
            if let Err(detail) = r {
                return (cases, Vec::new(), Some(fail(detail)));
            }
        }
        let results: Vec<Result<Case, Error>> = braids.par_iter().map(|l| self.case(id, &l.braid, max_strands)).collect();
        let mut units = Vec::new();
        for (l, r) in braids.iter().zip(results) {
            if matches!(id, YangBaxterR1 | YangBaxterR3 | YangBaxterLg21 | YangBaxterLg21Special | YangBaxterS31 | BurauRelations | JMatrix) {
                break;
            }
            cases += 1;
            let detail = match r {
                Ok(Case::Pass(u)) => {
                    if let Some(u) = u {
                        units.push(UnitRecord { case: l.label.clone(), sign: u.sign, shift: u.shift });
                    }
                    continue;
                }
                Ok(Case::Fail(m)) => m,
                Err(e) => format!("error: {e}"),
            };
            let cx = Counterexample { case: l.label.clone(), strands: Some(l.braid.strands()), braid: Some(l.braid.to_string()), seed, detail };
            return (cases, units, Some(cx));
        }
        (cases, units, None)
    }

    fn generator_intertwining(&self, id: CheckId, max_strands: usize) -> Result<(), String> {
        let kind = intertwiner_kind(id);
        let op = self.intertwiner_operator(kind);
        for n in 1..=max_strands {
            let inter = Intertwiner::new(kind, n);
            match intertwining_violation(&inter, &op) {
                Ok(None) => {}
                Ok(Some((letter, digits))) => return Err(format!("n={n}, generator {letter}, basis {:?}", one_based(&digits))),
                Err(e) => return Err(format!("n={n}: {e}")),
            }
        }
        Ok(())
    }

    fn intertwiner_operator(&self, kind: IntertwinerKind) -> LocalOperator<LaurentHalf> {
        match kind {
            IntertwinerKind::I21 => self.lg21_special.clone(),
            IntertwinerKind::I31 => self.s31.clone(),
            IntertwinerKind::J => self.r1.clone(),
            IntertwinerKind::K => self.r3.clone(),
        }
    }

    fn lg_one(&self, b: &BraidWord, flavor: LgFlavor) -> Result<LaurentHalf, Error> {
        let v = self.engine.invariant(b, flavor)?;
        Ok(v.as_one_var().expect("one-variable flavor").clone())
    }

    fn lg_two(&self, b: &BraidWord) -> Result<ExtScalar, Error> {
        let v = self.engine.invariant(b, LgFlavor::Lg21TwoVar)?;
        Ok(v.as_two_var().expect("two-variable flavor").clone())
    }

    fn case(&self, id: CheckId, b: &BraidWord, max_strands: usize) -> Result<Case, Error> {
        use CheckId::*;
        Ok(match id {
            YangBaxterR1 | YangBaxterR3 | YangBaxterLg21 | YangBaxterLg21Special | YangBaxterS31 | BurauRelations | JMatrix => {
                Case::Pass(None)
            }
            DeltaFixed => {
                let m = burau_image(b, BurauVariant::Standard)?;
                let delta = DenseMatrix::from_rows(delta_vector(b.strands()).into_iter().map(|x| vec![x]).collect());
                if m.mul(&delta) == delta {
                    Case::Pass(None)
                } else {
                    Case::Fail("Ψ(b)δ ≠ δ".into())
                }
            }
            AlexanderPaths => {
                let det = alexander_det(b)?;
                let values = [
                    ("trace R1/h", alexander_trace_with(&self.alex_r1, b, AlexanderWeight::H, true)?),
                    ("trace R3/h̃", alexander_trace_with(&self.alex_r3, b, AlexanderWeight::HTilde, false)?),
                    ("exterior μ1", alexander_exterior(b, ExteriorPath::ViaPsiMu1)?),
                    ("exterior ν", alexander_exterior(b, ExteriorPath::ViaGNu)?),
                ];
                let mut subs: Vec<Case> = values.iter().map(|(w, v)| up_to_unit(v, &det, w)).collect();
                for i in 0..values.len() {
                    for j in i + 1..values.len() {
                        subs.push(up_to_unit(&values[i].1, &values[j].1, values[i].0));
                    }
                }
                all_of(subs)
            }
            PartialTraceH => {
                let (c, ok) = partial_trace_scalar(&self.alex_r1.image(b), &AlexanderWeight::H.vector())?;
                if !ok {
                    Case::Fail("partial trace with h is not scalar".into())
                } else {
                    up_to_unit(&c, &alexander_det(b)?, "partial trace with h")
                }
            }
            PartialTraceMu21 => scalar_case(partial_trace_scalar(&self.engine.two_var.image(b), &mu21())?.1, "μ"),
            PartialTraceMu31 => scalar_case(partial_trace_scalar(&self.engine.special31.image(b), &mu31())?.1, "μ^{3,1}"),
            IntertwineI21 | IntertwineJ | IntertwineK | IntertwineI31 => {
                let kind = intertwiner_kind(id);
                let inter = Intertwiner::new(kind, b.strands());
                match word_intertwining_violation(&inter, b, &self.intertwiner_operator(kind))? {
                    None => Case::Pass(None),
                    Some(digits) => Case::Fail(format!("basis {:?}", one_based(&digits))),
                }
            }
            Markov => self.markov_case(b, b.strands() <= max_strands)?,
            Main21 => {
                let d = alexander_det(b)?;
                up_to_unit(&self.lg_one(b, LgFlavor::Lg21Special)?, &(&d * &d), "LG^{2,1} vs Δ²")
            }
            Main31 => {
                let d = alexander_det(b)?;
                up_to_unit(&self.lg_one(b, LgFlavor::Lg31Special)?, &(&(&d * &d) * &d), "LG^{3,1} vs Δ³")
            }
            Product21 => exact(&lg_product(b, ProductFlavor::Lg21)?, &self.lg_one(b, LgFlavor::Lg21Special)?, "product vs trace (2,1)"),
            Product31 => exact(&lg_product(b, ProductFlavor::Lg31)?, &self.lg_one(b, LgFlavor::Lg31Special)?, "product vs trace (3,1)"),
            FactorAlexander => {
                let twice = alexander_det(b)?.scale(&crate::scalar::Rational::from_integer(2.into()));
                let mut subs = Vec::new();
                for flavor in [ProductFlavor::Lg21, ProductFlavor::Lg31] {
                    for f in product_factors(b, flavor)? {
                        subs.push(up_to_unit(&f, &twice, "exterior factor vs 2Δ"));
                    }
                }
                all_of(subs)
            }
            ReductionT1 => {
                if b.closure_components() != 1 {
                    return Ok(Case::Pass(None));
                }
                let v = self.lg_two(b)?;
                all_of([
                    exact(&v.specialize(Specialization::T1ToOne), &LaurentHalf::one(), "LG(t, 1)"),
                    exact(&v.swap_variables().specialize(Specialization::T1ToOne), &LaurentHalf::one(), "LG(1, t)"),
                ])
            }
            Symmetry21 => {
                let v = self.lg_two(b)?;
                exact(&v.swap_variables(), &v, "LG(t1, t0) vs LG(t0, t1)")
            }
            YVanishing => {
                let v = self.lg_two(b)?;
                if v.ycoef.is_zero() {
                    Case::Pass(None)
                } else {
                    Case::Fail(format!("Y-coefficient {} is nonzero", v.ycoef))
                }
            }
        })
    }

    /// Ten conjugations (exact) and one stabilization of random sign (up to
    /// unit). The `(3,1)` value is only included when `with31`: stabilizing a
    /// four-strand braid means 8^5-dimensional traces.
    fn markov_case(&self, b: &BraidWord, with31: bool) -> Result<Case, Error> {
        let n = b.strands();
        let mut rng = ChaCha8Rng::seed_from_u64(hash_name(&b.to_string()) ^ n as u64);
        let base = self.markov_values(b, with31)?;
        let mut subs = Vec::new();
        for _ in 0..10 {
            let len = rng.gen_range(1..=4);
            let g = BraidWord::random_with(&mut rng, n, len);
            let conj = b.conjugate(&g)?;
            let vals = self.markov_values(&conj, with31)?;
            for ((name, x), (_, y)) in base.iter().zip(&vals) {
                subs.push(exact(y, x, &format!("{name} under conjugation by [{g}]")));
            }
        }
        let s = b.stabilize(rng.gen_bool(0.5));
        let vals = self.markov_values(&s, with31)?;
        for ((name, x), (_, y)) in base.iter().zip(&vals) {
            subs.push(up_to_unit(y, x, &format!("{name} under stabilization")));
        }
        Ok(all_of(subs))
    }

    fn markov_values(&self, b: &BraidWord, with31: bool) -> Result<Vec<(&'static str, LaurentHalf)>, Error> {
        let mut out = vec![("Δ", alexander_det(b)?), ("LG^{2,1}", self.lg_one(b, LgFlavor::Lg21Special)?)];
        if with31 {
            out.push(("LG^{3,1}", self.lg_one(b, LgFlavor::Lg31Special)?));
        }
        Ok(out)
    }
}

fn scalar_case(ok: bool, what: &str) -> Case {
    if ok {
        Case::Pass(None)
    } else {
        Case::Fail(format!("partial trace with {what} is not scalar"))
    }
}

fn uses_corpus(id: CheckId) -> bool {
    use CheckId::*;
    !matches!(id, YangBaxterR1 | YangBaxterR3 | YangBaxterLg21 | YangBaxterLg21Special | YangBaxterS31 | BurauRelations | JMatrix)
}

fn intertwiner_kind(id: CheckId) -> IntertwinerKind {
    match id {
        CheckId::IntertwineI21 => IntertwinerKind::I21,
        CheckId::IntertwineI31 => IntertwinerKind::I31,
        CheckId::IntertwineJ => IntertwinerKind::J,
        CheckId::IntertwineK => IntertwinerKind::K,
        _ => unreachable!("not an intertwiner check"),
    }
}

fn one_based(digits: &[usize]) -> Vec<usize> {
    digits.iter().map(|d| d + 1).collect()
}

/// FNV-1a, to give each check its own random stream from one seed.
fn hash_name(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn yb<R: Ring>(op: &LocalOperator<R>) -> Result<(), String> {
    match op.yang_baxter_violation() {
        None => Ok(()),
        Some(basis) => Err(format!("Yang–Baxter fails on basis {:?}", one_based(&basis))),
    }
}

fn burau_relations(max_strands: usize) -> Result<(), String> {
    for v in BurauVariant::ALL {
        for n in 3..=max_strands.max(3) {
            let g: Vec<DenseMatrix<LaurentHalf>> = (1..n).map(|i| burau_generator(n, i, v).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
            for i in 0..n - 1 {
                if i + 1 < n - 1 && g[i].mul(&g[i + 1]).mul(&g[i]) != g[i + 1].mul(&g[i]).mul(&g[i + 1]) {
                    return Err(format!("{v:?}: braid relation fails for σ{} on {n} strands", i + 1));
                }
                for j in i + 2..n - 1 {
                    if g[i].mul(&g[j]) != g[j].mul(&g[i]) {
                        return Err(format!("{v:?}: σ{} and σ{} do not commute on {n} strands", i + 1, j + 1));
                    }
                }
                if g[i].inverse().is_err() {
                    return Err(format!("{v:?}: σ{} is not invertible", i + 1));
                }
            }
        }
    }
    Ok(())
}

fn j_matrix_checks(max_strands: usize) -> Result<(), String> {
    let mut dets: Vec<LaurentHalf> = vec![LaurentHalf::zero()];
    for n in 2..=max_strands.max(3) {
        let j = j_n_matrix(n).map_err(|e| e.to_string())?;
        for i in 1..n {
            let psi = burau_generator(n, i, BurauVariant::Standard).map_err(|e| e.to_string())?;
            let g = burau_generator(n, i, BurauVariant::G21).map_err(|e| e.to_string())?;
            if j.mul(&psi) != g.mul(&j) {
                return Err(format!("J_{n} Ψ(σ{i}) ≠ G(σ{i}) J_{n}"));
            }
        }
        let det = j.det().map_err(|e| e.to_string())?;
        if n >= 3 {
            // det J_n = (-1)^n (t^{1/2} + t^{-1/2}) det J_{n-1} + det J_{n-2}
            let s = LaurentHalf::from_ints(-1, &[1, 0, 1]);
            let sign = if n % 2 == 0 { LaurentHalf::one() } else { -LaurentHalf::one() };
            let expect = &(&(&sign * &s) * &dets[n - 2]) + &dets[n - 3];
            if det != expect {
                return Err(format!("det J_{n} = {det}, recurrence gives {expect}"));
            }
        }
        if det.is_zero() {
            return Err(format!("J_{n} is singular"));
        }
        dets.push(det);
    }
    Ok(())
}

/// Runs a check by name with default operators.
pub fn run_check(name: &str, params: &CheckParams) -> Result<CheckReport, Error> {
    let id: CheckId = name.parse()?;
    shared_verifier().run(id, params)
}

pub fn run_suite(params: &CheckParams) -> Result<Vec<CheckReport>, Error> {
    shared_verifier().run_suite(params)
}

fn shared_verifier() -> &'static Verifier {
    static V: std::sync::OnceLock<Verifier> = std::sync::OnceLock::new();
    V.get_or_init(Verifier::new)
}

/// `op` with entry `(row, col)` (0-based) doubled.
pub fn perturb_entry<R: Ring>(op: &LocalOperator<R>, row: usize, col: usize) -> LocalOperator<R> {
    let v = op.get(row, col);
    op.with_entry(row, col, v.plus(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
        }
        assert!(matches!("nosuchcheck".parse::<CheckId>(), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn corpus_round_trips() {
        let c = corpus();
        assert!(c.iter().any(|(name, b)| *name == "trefoil" && b.strands() == 2 && b.to_string() == "1 1 1"));
        for (_, b) in &c {
            assert_eq!(&BraidWord::parse(&b.to_string(), b.strands()).unwrap(), b);
        }
    }

    #[test]
    fn main21_trefoil_reports_unit() {
        let params = CheckParams { braid: Some(BraidWord::parse("1 1 1", 2).unwrap()), ..CheckParams::default() };
        let r = run_check("main21", &params).unwrap();
        assert!(r.passed());
        assert_eq!(r.units.len(), 1);
    }

    #[test]
    fn bounds_are_enforced() {
        let params = CheckParams { max_strands: Some(9), ..CheckParams::default() };
        assert!(matches!(run_check("main31", &params), Err(Error::OutOfBounds(_))));
    }

    #[test]
    fn corrupted_lg21_fails_main21() {
        let bad = Verifier::new().with_lg21(perturb_entry(&r_lg21(), 0, 0));
        let params = CheckParams { braid: Some(BraidWord::parse("1 1 1", 2).unwrap()), ..CheckParams::default() };
        let r = bad.run(CheckId::Main21, &params).unwrap();
        assert!(!r.passed());
        let cx = r.counterexample.unwrap();
        assert_eq!(cx.braid.as_deref(), Some("1 1 1"));
    }
}
