//! Campaign configuration and grid expansion.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use specht_core::closed_forms::core_exceeds_remainder;
use specht_core::partition::hook_data;
use specht_core::reps::{Backend, Limits, SamplingConfig};
use specht_core::Partition;

use crate::case::{CaseSpec, Check};

/// A signed permutation module index `α|β`, written `"2,1|3"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub alpha: Partition,
    pub beta: Partition,
}

impl std::str::FromStr for Pair {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Pair> {
        let (a, b) = s
            .split_once('|')
            .with_context(|| format!("pair {s:?} must look like \"alpha|beta\""))?;
        Ok(Pair {
            alpha: a.parse()?,
            beta: b.parse()?,
        })
    }
}

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}|{}", self.alpha, self.beta)
    }
}

impl Serialize for Pair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Pair, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// One grid of cases for a single check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Campaign {
    pub check: Check,
    #[serde(default = "default_primes")]
    pub primes: Vec<usize>,
    #[serde(default = "default_n_min")]
    pub n_min: usize,
    #[serde(default = "default_n_max")]
    pub n_max: usize,
    /// Explicit partitions; replaces the generated grid when non-empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub partitions: Vec<Partition>,
    /// Explicit signed module indices; replaces the generated grid when non-empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<Pair>,
    /// Ranks of the elementary abelian subgroup; all admissible ranks when empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub s: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub backend: Option<Backend>,
    #[serde(default)]
    pub perturb: usize,
}

fn default_primes() -> Vec<usize> {
    vec![2, 3]
}

fn default_n_min() -> usize {
    1
}

fn default_n_max() -> usize {
    6
}

impl Campaign {
    pub fn new(check: Check) -> Campaign {
        Campaign {
            check,
            primes: default_primes(),
            n_min: default_n_min(),
            n_max: default_n_max(),
            partitions: Vec::new(),
            pairs: Vec::new(),
            s: Vec::new(),
            backend: None,
            perturb: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub sampling: SamplingConfig,
    #[serde(default)]
    pub limits: Limits,
    #[serde(default = "default_backend")]
    pub backend: Backend,
    #[serde(default)]
    pub campaign: Vec<Campaign>,
}

fn default_backend() -> Backend {
    Backend::Auto
}

impl Default for Config {
    fn default() -> Config {
        Config {
            sampling: SamplingConfig::default(),
            limits: Limits::default(),
            backend: Backend::Auto,
            campaign: Vec::new(),
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Config::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Config> {
        let cfg: Config = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// The default campaign: every check on its default grid.
    pub fn default_campaigns(checks: &[Check]) -> Config {
        Config {
            campaign: checks.iter().map(|&c| Campaign::new(c)).collect(),
            ..Config::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sampling.samples == 0 {
            bail!("sampling.samples must be positive");
        }
        if self.sampling.ext == 0 {
            bail!("sampling.ext must be positive");
        }
        for c in &self.campaign {
            if let Some(&p) = c.primes.iter().find(|&&p| !is_prime(p)) {
                bail!("campaign {}: {p} is not prime", c.check);
            }
            if c.n_min > c.n_max {
                bail!(
                    "campaign {}: n_min {} > n_max {}",
                    c.check,
                    c.n_min,
                    c.n_max
                );
            }
        }
        Ok(())
    }

    /// Expands every campaign into its cases, in a fixed order.
    pub fn cases(&self) -> Vec<CaseSpec> {
        self.campaign.iter().flat_map(|c| self.expand(c)).collect()
    }

    fn expand(&self, c: &Campaign) -> Vec<CaseSpec> {
        let mut out = Vec::new();
        let base = |p: usize| CaseSpec {
            check: c.check,
            p,
            mu: None,
            alpha: None,
            beta: None,
            s: None,
            sampling: self.sampling,
            backend: c.backend.unwrap_or(self.backend),
            limits: self.limits,
            perturb: c.perturb,
        };
        for &p in &c.primes {
            if c.check.uses_pairs() {
                let pairs = if c.pairs.is_empty() {
                    signed_grid(c.n_min, c.n_max)
                } else {
                    c.pairs.clone()
                };
                for pair in pairs {
                    let d = (pair.alpha.size() + pair.beta.size()) / p;
                    for s in ranks(&c.s, d) {
                        out.push(CaseSpec {
                            alpha: Some(pair.alpha.clone()),
                            beta: Some(pair.beta.clone()),
                            s: Some(s),
                            ..base(p)
                        });
                    }
                }
                continue;
            }
            let explicit = !c.partitions.is_empty();
            let partitions = if explicit {
                c.partitions.clone()
            } else {
                (c.n_min..=c.n_max)
                    .flat_map(|n| candidates(c.check, n))
                    .filter(|mu| admissible(c.check, mu, p))
                    .collect()
            };
            for mu in partitions {
                if matches!(c.check, Check::HookCoprime | Check::Additivity) {
                    let d = mu.size() / p;
                    for s in ranks(&c.s, d) {
                        out.push(CaseSpec {
                            mu: Some(mu.clone()),
                            s: Some(s),
                            ..base(p)
                        });
                    }
                } else {
                    out.push(CaseSpec {
                        mu: Some(mu),
                        ..base(p)
                    });
                }
            }
        }
        out
    }
}

fn ranks(explicit: &[usize], d: usize) -> Vec<usize> {
    if explicit.is_empty() {
        (1..=d).collect()
    } else {
        explicit.to_vec()
    }
}

fn candidates(check: Check, n: usize) -> Vec<Partition> {
    match check {
        Check::CoreFreeness => Partition::all(n),
        _ => Partition::hooks(n),
    }
}

/// Whether a generated partition satisfies the hypotheses of the check.
fn admissible(check: Check, mu: &Partition, p: usize) -> bool {
    let n = mu.size();
    let Ok(h) = hook_data(mu, p) else {
        return check == Check::CoreFreeness && n >= p && core_exceeds_remainder(mu, p);
    };
    match check {
        Check::HookCoprime => h.r != 0 && h.d >= 1,
        Check::HookCorollary => h.r != 0 && h.d >= 1,
        Check::HookMultiple => h.r == 0 && h.d >= 1,
        Check::Additivity => h.r != 0 && h.a >= 2,
        Check::CoreFreeness => n >= p && core_exceeds_remainder(mu, p),
        Check::Monomial => h.d >= 2,
        Check::Complexity => true,
        Check::SignedPermutation => false,
    }
}

/// All `α|β` with `n_min <= |α| + |β| <= n_max`.
fn signed_grid(n_min: usize, n_max: usize) -> Vec<Pair> {
    let parts = |k: usize| {
        if k == 0 {
            vec![Partition::empty()]
        } else {
            Partition::all(k)
        }
    };
    let mut out = Vec::new();
    for n in n_min.max(1)..=n_max {
        for k in (0..=n).rev() {
            for alpha in parts(k) {
                for beta in parts(n - k) {
                    out.push(Pair {
                        alpha: alpha.clone(),
                        beta,
                    });
                }
            }
        }
    }
    out
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|q| q * q <= p)
            .all(|q| !p.is_multiple_of(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_campaign_file() {
        let cfg = Config::parse(
            r#"
            backend = "straight"
            [sampling]
            samples = 5
            ext = 8
            seed = 9
            [[campaign]]
            check = "thm4.4"
            primes = [2]
            partitions = ["2,1,1"]
            [[campaign]]
            check = "signed-permutation"
            primes = [3]
            pairs = ["2|1", "-|3"]
            s = [1]
            "#,
        )
        .unwrap();
        assert_eq!(cfg.sampling.samples, 5);
        assert_eq!(cfg.backend, Backend::Straightened);
        assert_eq!(cfg.campaign[0].check, Check::HookMultiple);
        let cases = cfg.cases();
        assert_eq!(cases.len(), 3);
        assert_eq!(cases[0].backend, Backend::Straightened);
        assert_eq!(cases[2].alpha, Some(Partition::empty()));
        assert_eq!(cases[2].s, Some(1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Config::parse("[[campaign]]\ncheck = \"nope\"").is_err());
        assert!(Config::parse("[[campaign]]\ncheck = \"monomial\"\nprimes = [4]").is_err());
        assert!(Config::parse("[sampling]\nsamples = 0").is_err());
        assert!(Config::parse("bogus = 1").is_err());
        assert!("2,1".parse::<Pair>().is_err());
    }

    #[test]
    fn generated_grids_respect_hypotheses() {
        let cfg = Config::default_campaigns(&Check::ALL);
        let cases = cfg.cases();
        assert!(!cases.is_empty());
        for c in &cases {
            if let Some(mu) = &c.mu {
                if c.check != Check::CoreFreeness {
                    assert!(mu.is_hook());
                }
                if c.check == Check::HookMultiple {
                    assert_eq!(mu.size() % c.p, 0);
                }
                if c.check == Check::HookCoprime {
                    assert_ne!(mu.size() % c.p, 0);
                    assert!(c.s.unwrap() <= mu.size() / c.p);
                }
            }
        }
    }

    #[test]
    fn signed_grid_counts() {
        // n = 2: (2|-), (1,1|-), (1|1), (-|2), (-|1,1)
        assert_eq!(signed_grid(2, 2).len(), 5);
        assert_eq!(signed_grid(0, 1).len(), 2);
    }

    #[test]
    fn primes() {
        let ps: Vec<usize> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
