//! Single verification cases: a prediction, a sampled computation, a verdict.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use specht_core::closed_forms::{
    core_exceeds_remainder, corollary_prediction, hook_multiple_prediction, hook_prediction,
    signed_prediction, Prediction, SignedShape,
};
use specht_core::partition::{hook_data, p_core_weight};
use specht_core::reps::{
    direct_sum, generic_jordan_type, signed_perm_rep, specht_rep, specht_rep_straightened, Backend,
    GenericTypeReport, Limits, SamplingConfig,
};
use specht_core::tableau::{enumerate_standard, DEFAULT_ENUMERATION_LIMIT};
use specht_core::{Error as CoreError, JordanType, Partition, RankSequence};

/// The statement a case checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Stable type of a signed permutation module on `E_s` is `(1^N(α,β,s))`.
    SignedPermutation,
    /// Stable type of a hook Specht module with `p ∤ n` on `E_s` is `(1^N(μ;s))`.
    HookCoprime,
    /// Product-form value of the hook count at the module's complexity.
    HookCorollary,
    /// Stable type of a hook Specht module with `p | n` on `E_d`.
    HookMultiple,
    /// Generic types add over direct sums and over the split of
    /// `M((a-1)|(b+1))` into two hook Specht modules.
    Additivity,
    /// `S^μ` on `E_d` is generically free when `|core| > r`.
    CoreFreeness,
    /// Higher generators act monomially on standard polytabloids of hooks.
    Monomial,
    /// The sampled stable type on `E_w` witnesses complexity `w`.
    Complexity,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::SignedPermutation,
        Check::HookCoprime,
        Check::HookCorollary,
        Check::HookMultiple,
        Check::Additivity,
        Check::CoreFreeness,
        Check::Monomial,
        Check::Complexity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::SignedPermutation => "signed-permutation",
            Check::HookCoprime => "hook-coprime",
            Check::HookCorollary => "hook-corollary",
            Check::HookMultiple => "hook-multiple",
            Check::Additivity => "additivity",
            Check::CoreFreeness => "core-freeness",
            Check::Monomial => "monomial",
            Check::Complexity => "complexity",
        }
    }

    /// Alternative command-line names.
    pub fn aliases(self) -> &'static [&'static str] {
        match self {
            Check::SignedPermutation => &["thm3.2"],
            Check::HookCoprime => &["thm4.1"],
            Check::HookCorollary => &["cor4.2"],
            Check::HookMultiple => &["thm4.4"],
            Check::Additivity => &["prop2.1"],
            Check::CoreFreeness => &["prop2.4iii"],
            Check::Monomial => &["lemma4.3ii"],
            Check::Complexity => &[],
        }
    }

    /// Whether cases are indexed by a pair `(α, β)` rather than a partition.
    pub fn uses_pairs(self) -> bool {
        self == Check::SignedPermutation
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Check, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s || c.aliases().contains(&s))
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Check {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Check, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Everything needed to run one case deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSpec {
    pub check: Check,
    pub p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    pub sampling: SamplingConfig,
    pub backend: Backend,
    pub limits: Limits,
    /// Extra trivial blocks added to the prediction; a harness self-test.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub perturb: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl CaseSpec {
    pub fn describe(&self) -> String {
        let mut out = format!("{} p={}", self.check, self.p);
        if let Some(mu) = &self.mu {
            out += &format!(" mu=({mu})");
        }
        if let (Some(a), Some(b)) = (&self.alpha, &self.beta) {
            out += &format!(" M(({a})|({b}))");
        }
        if let Some(s) = self.s {
            out += &format!(" s={s}");
        }
        if self.perturb > 0 {
            out += &format!(" perturb={}", self.perturb);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED-scale")]
    SkippedScale,
    /// The parameters violate the statement's hypotheses.
    #[serde(rename = "INVALID")]
    Invalid,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::SkippedScale => "SKIPPED-scale",
            Verdict::Invalid => "INVALID",
        })
    }
}

/// The closed-form side of a case.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jordan: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complexity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// One sampled module in a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampled {
    pub module: String,
    pub dim: usize,
    pub s: usize,
    pub jordan: String,
    pub stable: String,
    pub attained_by_single_sample: bool,
    pub rank_sequences: Vec<RankSequence>,
}

impl Sampled {
    fn new(module: &str, dim: usize, s: usize, report: &GenericTypeReport) -> Sampled {
        Sampled {
            module: module.to_string(),
            dim,
            s,
            jordan: report.jordan.to_string(),
            stable: report.stable.to_string(),
            attained_by_single_sample: report.attained_by_single_sample,
            rank_sequences: report.rank_sequences.clone(),
        }
    }
}

/// The computed side of a case.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observed {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jordan: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<Sampled>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub spec: CaseSpec,
    pub predicted: Expected,
    pub computed: Observed,
    pub verdict: Verdict,
    pub seeds: Vec<u64>,
    pub millis: Option<u64>,
}

struct Outcome {
    predicted: Expected,
    computed: Observed,
    pass: bool,
    seeds: Vec<u64>,
}

fn required<'a, T>(x: &'a Option<T>, what: &str) -> Result<&'a T, CoreError> {
    x.as_ref()
        .ok_or_else(|| CoreError::InvalidArgument(format!("case needs {what}")))
}

fn perturbed(stable: &JordanType, k: usize) -> JordanType {
    if k == 0 {
        stable.clone()
    } else {
        stable
            .union(&JordanType::uniform(stable.p(), 1, k))
            .expect("same p")
    }
}

fn expected_from(pred: &Prediction, perturb: usize) -> Expected {
    Expected {
        s: Some(pred.s),
        stable: Some(perturbed(&pred.stable, perturb).to_string()),
        jordan: None,
        complexity: Some(pred.complexity),
        note: None,
    }
}

/// Compares a closed-form stable type with the sampled one.
fn compare_stable(
    spec: &CaseSpec,
    pred: &Prediction,
    module: Sampled,
    report: &GenericTypeReport,
) -> Outcome {
    let expected = perturbed(&pred.stable, spec.perturb);
    Outcome {
        pass: report.stable == expected,
        predicted: expected_from(pred, spec.perturb),
        computed: Observed {
            stable: Some(report.stable.to_string()),
            jordan: Some(report.jordan.to_string()),
            modules: vec![module],
            note: None,
        },
        seeds: report.seeds.clone(),
    }
}

fn sample_specht(
    spec: &CaseSpec,
    mu: &Partition,
    s: usize,
) -> Result<(Sampled, GenericTypeReport), CoreError> {
    let rep = specht_rep(mu, spec.p as u32, s, spec.backend, &spec.limits)?;
    let report = generic_jordan_type(&rep, &spec.sampling)?;
    Ok((Sampled::new(rep.label(), rep.dim(), s, &report), report))
}

fn require_hook(mu: &Partition) -> Result<(), CoreError> {
    if mu.is_hook() {
        Ok(())
    } else {
        Err(CoreError::NotAHook(mu.to_string()))
    }
}

fn evaluate(spec: &CaseSpec) -> Result<Outcome, CoreError> {
    let p = spec.p;
    match spec.check {
        Check::SignedPermutation => {
            let alpha = required(&spec.alpha, "alpha")?;
            let beta = required(&spec.beta, "beta")?;
            let s = *required(&spec.s, "s")?;
            let shape = SignedShape::new(alpha, beta, p)?;
            if s == 0 || s > shape.d {
                return Err(CoreError::Hypothesis(format!(
                    "need 1 <= s <= d = {}",
                    shape.d
                )));
            }
            let pred = signed_prediction(&shape, s)?;
            let rep = signed_perm_rep(alpha, beta, p as u32, s, &spec.limits)?;
            let report = generic_jordan_type(&rep, &spec.sampling)?;
            let module = Sampled::new(rep.label(), rep.dim(), s, &report);
            Ok(compare_stable(spec, &pred, module, &report))
        }
        Check::HookCoprime => {
            let mu = required(&spec.mu, "mu")?;
            let s = *required(&spec.s, "s")?;
            let h = hook_data(mu, p)?;
            if s == 0 || s > h.d {
                return Err(CoreError::Hypothesis(format!("need 1 <= s <= d = {}", h.d)));
            }
            let pred = hook_prediction(&h, s)?;
            let (module, report) = sample_specht(spec, mu, s)?;
            Ok(compare_stable(spec, &pred, module, &report))
        }
        Check::HookCorollary => {
            let mu = required(&spec.mu, "mu")?;
            let pred = corollary_prediction(&hook_data(mu, p)?)?;
            let (module, report) = sample_specht(spec, mu, pred.s)?;
            Ok(compare_stable(spec, &pred, module, &report))
        }
        Check::HookMultiple => {
            let mu = required(&spec.mu, "mu")?;
            let pred = hook_multiple_prediction(&hook_data(mu, p)?)?;
            let (module, report) = sample_specht(spec, mu, pred.s)?;
            Ok(compare_stable(spec, &pred, module, &report))
        }
        Check::Additivity => additivity(spec),
        Check::CoreFreeness => {
            let mu = required(&spec.mu, "mu")?;
            if !core_exceeds_remainder(mu, p) {
                return Err(CoreError::Hypothesis(format!(
                    "the {p}-core of ({mu}) is not larger than n mod {p}"
                )));
            }
            let d = mu.size() / p;
            let (module, report) = sample_specht(spec, mu, d)?;
            let expected = JordanType::uniform(p, 1, spec.perturb);
            Ok(Outcome {
                pass: report.stable == expected,
                predicted: Expected {
                    s: Some(d),
                    stable: Some(expected.to_string()),
                    note: Some("generically free".into()),
                    ..Expected::default()
                },
                computed: Observed {
                    stable: Some(report.stable.to_string()),
                    jordan: Some(report.jordan.to_string()),
                    modules: vec![module],
                    note: None,
                },
                seeds: report.seeds,
            })
        }
        Check::Monomial => monomial(spec),
        Check::Complexity => complexity(spec),
    }
}

fn additivity(spec: &CaseSpec) -> Result<Outcome, CoreError> {
    let p = spec.p;
    let mu = required(&spec.mu, "mu")?;
    let h = hook_data(mu, p)?;
    if h.r == 0 || h.a < 2 {
        return Err(CoreError::Hypothesis(format!(
            "need p not dividing n and a >= 2 for ({mu})"
        )));
    }
    let s = spec.s.unwrap_or(h.d);
    if s > h.d {
        return Err(CoreError::Hypothesis(format!("need s <= d = {}", h.d)));
    }
    let lambda = Partition::hook(h.a - 1, h.b + 1)?;
    let alpha = Partition::new(vec![h.a - 1])?;
    let beta = Partition::new(vec![h.b + 1])?;
    let m = signed_perm_rep(&alpha, &beta, p as u32, s, &spec.limits)?;
    let s1 = specht_rep(mu, p as u32, s, spec.backend, &spec.limits)?;
    let s2 = specht_rep(&lambda, p as u32, s, spec.backend, &spec.limits)?;
    let sum = direct_sum(&s1, &s2)?;
    let reports = [&m, &s1, &s2, &sum]
        .iter()
        .map(|rep| generic_jordan_type(rep, &spec.sampling))
        .collect::<Result<Vec<_>, _>>()?;
    let parts = reports[1].jordan.union(&reports[2].jordan)?;
    let expected = perturbed(&parts, spec.perturb);
    let pass = reports[0].jordan == expected && reports[3].jordan == expected;
    let modules = [&m, &s1, &s2, &sum]
        .iter()
        .zip(&reports)
        .map(|(rep, report)| Sampled::new(rep.label(), rep.dim(), s, report))
        .collect();
    Ok(Outcome {
        pass,
        predicted: Expected {
            s: Some(s),
            jordan: Some(expected.to_string()),
            note: Some(format!("sum of the types of S^({mu}) and S^({lambda})")),
            ..Expected::default()
        },
        computed: Observed {
            jordan: Some(reports[0].jordan.to_string()),
            stable: Some(reports[0].stable.to_string()),
            modules,
            note: Some(format!("direct sum type {}", reports[3].jordan)),
        },
        seeds: reports[0].seeds.clone(),
    })
}

fn monomial(spec: &CaseSpec) -> Result<Outcome, CoreError> {
    let p = spec.p;
    let mu = required(&spec.mu, "mu")?;
    require_hook(mu)?;
    let s = mu.size() / p;
    if s < 2 {
        return Err(CoreError::Hypothesis(format!(
            "({mu}) has fewer than two blocks of size {p}"
        )));
    }
    let rep = specht_rep_straightened(mu, p as u32, s, &spec.limits)?;
    let basis = enumerate_standard(mu, DEFAULT_ENUMERATION_LIMIT)?;
    let mut fixed_expected = 0usize;
    let mut fixed_seen = 0usize;
    let mut violations = Vec::new();
    for i in 2..=s {
        let g = &rep.gens()[i - 1];
        let block: Vec<u8> = (((i - 1) * p + 1)..=(i * p)).map(|x| x as u8).collect();
        for (k, t) in basis.iter().enumerate() {
            let in_row = block.iter().all(|x| t.row(0).contains(x));
            let in_col = block.iter().all(|x| t.column(0).contains(x));
            let criterion = in_row || in_col;
            fixed_expected += usize::from(criterion);
            let col = g.column(k);
            let monomial = col.len() == 1 && (col[0].1 == 1 || col[0].1 == p as u32 - 1);
            let fixed = monomial && col[0].0 as usize == k;
            fixed_seen += usize::from(fixed);
            let ok = monomial && fixed == criterion && (!fixed || col[0].1 == 1);
            if !ok {
                violations.push(format!("g_{i} on {}", **t));
            }
        }
    }
    let fixed_expected = fixed_expected + spec.perturb;
    Ok(Outcome {
        pass: violations.is_empty() && fixed_seen == fixed_expected,
        predicted: Expected {
            s: Some(s),
            note: Some(format!(
                "one entry ±1 per column; {fixed_expected} fixed columns"
            )),
            ..Expected::default()
        },
        computed: Observed {
            note: Some(if violations.is_empty() {
                format!("monomial; {fixed_seen} fixed columns")
            } else {
                format!("violations: {}", violations.join(", "))
            }),
            ..Observed::default()
        },
        seeds: Vec::new(),
    })
}

fn complexity(spec: &CaseSpec) -> Result<Outcome, CoreError> {
    let p = spec.p;
    let mu = required(&spec.mu, "mu")?;
    require_hook(mu)?;
    let w = p_core_weight(mu, p).weight;
    let upper = format!("complexity {w} (upper bound: p-weight)");
    if w == 0 {
        let pass = spec.perturb == 0;
        return Ok(Outcome {
            pass,
            predicted: Expected {
                complexity: Some(0),
                note: Some(upper),
                ..Expected::default()
            },
            computed: Observed {
                note: Some("CONFIRMED: weight 0".into()),
                ..Observed::default()
            },
            seeds: Vec::new(),
        });
    }
    let (module, report) = sample_specht(spec, mu, w)?;
    let witnessed = !report.stable.is_empty() && spec.perturb == 0;
    Ok(Outcome {
        pass: witnessed,
        predicted: Expected {
            s: Some(w),
            complexity: Some(w),
            note: Some(upper),
            ..Expected::default()
        },
        computed: Observed {
            stable: Some(report.stable.to_string()),
            jordan: Some(report.jordan.to_string()),
            modules: vec![module],
            note: Some(if witnessed {
                format!("CONFIRMED: not generically free on E_{w}")
            } else {
                format!("UNCONFIRMED: generically free on E_{w}")
            }),
        },
        seeds: report.seeds,
    })
}

/// Runs one case. Scale violations and hypothesis violations are reported
/// in the verdict rather than as errors.
pub fn run_case(spec: &CaseSpec, timings: bool) -> CaseResult {
    let start = Instant::now();
    let outcome = evaluate(spec);
    let millis = timings.then(|| start.elapsed().as_millis() as u64);
    match outcome {
        Ok(o) => CaseResult {
            spec: spec.clone(),
            predicted: o.predicted,
            computed: o.computed,
            verdict: if o.pass { Verdict::Pass } else { Verdict::Fail },
            seeds: o.seeds,
            millis,
        },
        Err(e) => CaseResult {
            spec: spec.clone(),
            predicted: Expected::default(),
            computed: Observed {
                note: Some(e.to_string()),
                ..Observed::default()
            },
            verdict: match e {
                CoreError::ScaleExceeded { .. } => Verdict::SkippedScale,
                _ => Verdict::Invalid,
            },
            seeds: Vec::new(),
            millis,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(check: Check, p: usize) -> CaseSpec {
        CaseSpec {
            check,
            p,
            mu: None,
            alpha: None,
            beta: None,
            s: None,
            sampling: SamplingConfig {
                seed: 42,
                ..SamplingConfig::default()
            },
            backend: Backend::Auto,
            limits: Limits::default(),
            perturb: 0,
        }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            for a in c.aliases() {
                assert_eq!(a.parse::<Check>().unwrap(), c);
            }
        }
        assert!("thm9".parse::<Check>().is_err());
    }

    #[test]
    fn multiple_of_p_hook_passes() {
        let mut c = spec(Check::HookMultiple, 2);
        c.mu = Some("2,1,1".parse().unwrap());
        let r = run_case(&c, false);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.computed.stable.as_deref(), Some("(1^1)"));
        assert_eq!(r.seeds.len(), 20);
        assert!(r.millis.is_none());
    }

    #[test]
    fn signed_module_passes() {
        let mut c = spec(Check::SignedPermutation, 2);
        c.alpha = Some("2".parse().unwrap());
        c.beta = Some("2".parse().unwrap());
        c.s = Some(1);
        let r = run_case(&c, true);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.computed.stable.as_deref(), Some("(1^2)"));
        assert!(r.millis.is_some());
    }

    #[test]
    fn hypothesis_violation_is_reported() {
        let mut c = spec(Check::HookCoprime, 2);
        c.mu = Some("2,1,1".parse().unwrap());
        c.s = Some(1);
        let r = run_case(&c, false);
        assert_eq!(r.verdict, Verdict::Invalid);
        assert!(r.computed.note.unwrap().contains("hypothesis"));
    }

    #[test]
    fn scale_guard_skips() {
        let mut c = spec(Check::HookCoprime, 2);
        c.mu = Some("6,1,1,1,1,1,1,1,1,1,1,1".parse().unwrap());
        c.s = Some(1);
        c.limits.max_specht_dim = 10;
        assert_eq!(run_case(&c, false).verdict, Verdict::SkippedScale);
    }

    #[test]
    fn perturbation_forces_failure() {
        let mut c = spec(Check::HookCoprime, 3);
        c.mu = Some("5,1,1".parse().unwrap());
        c.s = Some(1);
        assert_eq!(run_case(&c, false).verdict, Verdict::Pass);
        c.perturb = 1;
        let r = run_case(&c, false);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.predicted.stable.as_deref(), Some("(1^4)"));
    }

    #[test]
    fn complexity_examples() {
        for (mu, p, expect_w, stable) in [
            ("5,1,1", 3, 1, Some("(1^3)")),
            ("2,1,1", 3, 0, None),
            ("2,1,1", 2, 2, Some("(1^1)")),
        ] {
            let mut c = spec(Check::Complexity, p);
            c.mu = Some(mu.parse().unwrap());
            let r = run_case(&c, false);
            assert_eq!(r.verdict, Verdict::Pass, "{mu}");
            assert_eq!(r.predicted.complexity, Some(expect_w));
            assert_eq!(r.computed.stable.as_deref(), stable);
            assert!(r.computed.note.unwrap().starts_with("CONFIRMED"));
        }
    }
}
