//! `name:arg1:arg2` generator specifications, e.g. `hypercube:3`,
//! `random:10:0.4`, `regular:8:3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::generators::{self, RESAMPLE_BUDGET};
use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum GeneratorSpec {
    Empty {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Star {
        n: usize,
    },
    Hypercube {
        d: usize,
    },
    /// G(n, p).
    Random {
        n: usize,
        p: f64,
    },
    /// G(n, p) conditioned on connectivity.
    Connected {
        n: usize,
        p: f64,
    },
    /// Connected G(n, p) conditioned on not being regular.
    Nonregular {
        n: usize,
        p: f64,
    },
    Regular {
        n: usize,
        d: usize,
    },
    ConnectedRegular {
        n: usize,
        d: usize,
    },
}

const NAMES: &str =
    "empty, complete, cycle, path, star, hypercube, random, connected, nonregular, regular, connected-regular";

impl GeneratorSpec {
    /// Whether the output depends on the seed.
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            Self::Random { .. }
                | Self::Connected { .. }
                | Self::Nonregular { .. }
                | Self::Regular { .. }
                | Self::ConnectedRegular { .. }
        )
    }

    /// Rejects parameter combinations no seed can satisfy.
    pub fn check(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidParameter(msg));
        match *self {
            Self::Regular { n, d } | Self::ConnectedRegular { n, d } => {
                if n == 0 || d >= n {
                    return bad(format!("no {d}-regular graph on {n} vertices"));
                }
                if n * d % 2 == 1 {
                    return bad(format!("no {d}-regular graph on {n} vertices: n*d is odd"));
                }
                if matches!(self, Self::ConnectedRegular { .. }) && d == 0 && n > 1 {
                    return bad(format!("a 0-regular graph on {n} vertices is disconnected"));
                }
                if matches!(self, Self::ConnectedRegular { .. }) && d == 1 && n > 2 {
                    return bad(format!("a 1-regular graph on {n} vertices is disconnected"));
                }
                Ok(())
            }
            Self::Nonregular { n, p } => {
                if n < 3 {
                    bad(format!("every connected graph on {n} vertices is regular"))
                } else if p <= 0.0 || p >= 1.0 {
                    bad(format!("nonregular needs 0 < p < 1, got {p}"))
                } else {
                    Ok(())
                }
            }
            Self::Connected { n, p } if p <= 0.0 && n > 1 => {
                bad(format!("connected needs p > 0 on {n} vertices"))
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Graph, GraphError> {
        self.check()?;
        match *self {
            Self::Empty { n } => generators::empty(n),
            Self::Complete { n } => generators::complete(n),
            Self::Cycle { n } => generators::cycle(n),
            Self::Path { n } => generators::path(n),
            Self::Star { n } => generators::star(n),
            Self::Hypercube { d } => generators::hypercube(d),
            Self::Random { n, p } => generators::random_graph(n, p, seed),
            Self::Connected { n, p } => generators::random_connected(n, p, seed),
            Self::Regular { n, d } => generators::random_regular(n, d, seed),
            Self::Nonregular { n, p } => resample(seed, |s| {
                let g = generators::random_connected(n, p, s)?;
                Ok((!g.is_regular()).then_some(g))
            }),
            Self::ConnectedRegular { n, d } => resample(seed, |s| {
                let g = generators::random_regular(n, d, s)?;
                Ok(g.is_connected().then_some(g))
            }),
        }
    }
}

fn resample<F>(seed: u64, mut attempt: F) -> Result<Graph, GraphError>
where
    F: FnMut(u64) -> Result<Option<Graph>, GraphError>,
{
    for k in 0..RESAMPLE_BUDGET as u64 {
        if let Some(g) = attempt(mix_seed(seed, k))? {
            return Ok(g);
        }
    }
    Err(GraphError::ResampleBudgetExhausted {
        attempts: RESAMPLE_BUDGET,
    })
}

/// SplitMix64 finaliser over `seed + k`.
pub fn mix_seed(seed: u64, k: u64) -> u64 {
    let mut z = seed.wrapping_add(k.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad generator spec `{spec}`: {reason}")]
pub struct SpecError {
    pub spec: String,
    pub reason: String,
}

impl FromStr for GeneratorSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| SpecError {
            spec: s.to_string(),
            reason,
        };
        let tokens: Vec<&str> = s.trim().split(':').collect();
        let (name, args) = tokens.split_first().expect("split yields one token");
        let arity = match *name {
            "random" | "connected" | "nonregular" | "regular" | "connected-regular" => 2,
            "empty" | "complete" | "cycle" | "path" | "star" | "hypercube" => 1,
            other => {
                return Err(err(format!(
                    "unknown generator `{other}` (expected one of {NAMES})"
                )))
            }
        };
        if args.len() != arity {
            return Err(err(format!(
                "`{name}` takes {arity} argument(s), got {}",
                args.len()
            )));
        }
        let int = |k: usize| -> Result<usize, SpecError> {
            args[k]
                .parse()
                .map_err(|_| err(format!("bad integer token `{}`", args[k])))
        };
        let prob = |k: usize| -> Result<f64, SpecError> {
            args[k]
                .parse::<f64>()
                .ok()
                .filter(|p| (0.0..=1.0).contains(p))
                .ok_or_else(|| err(format!("bad probability token `{}`", args[k])))
        };
        Ok(match *name {
            "empty" => Self::Empty { n: int(0)? },
            "complete" => Self::Complete { n: int(0)? },
            "cycle" => Self::Cycle { n: int(0)? },
            "path" => Self::Path { n: int(0)? },
            "star" => Self::Star { n: int(0)? },
            "hypercube" => Self::Hypercube { d: int(0)? },
            "random" => Self::Random {
                n: int(0)?,
                p: prob(1)?,
            },
            "connected" => Self::Connected {
                n: int(0)?,
                p: prob(1)?,
            },
            "nonregular" => Self::Nonregular {
                n: int(0)?,
                p: prob(1)?,
            },
            "regular" => Self::Regular {
                n: int(0)?,
                d: int(1)?,
            },
            _ => Self::ConnectedRegular {
                n: int(0)?,
                d: int(1)?,
            },
        })
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty { n } => write!(f, "empty:{n}"),
            Self::Complete { n } => write!(f, "complete:{n}"),
            Self::Cycle { n } => write!(f, "cycle:{n}"),
            Self::Path { n } => write!(f, "path:{n}"),
            Self::Star { n } => write!(f, "star:{n}"),
            Self::Hypercube { d } => write!(f, "hypercube:{d}"),
            Self::Random { n, p } => write!(f, "random:{n}:{p}"),
            Self::Connected { n, p } => write!(f, "connected:{n}:{p}"),
            Self::Nonregular { n, p } => write!(f, "nonregular:{n}:{p}"),
            Self::Regular { n, d } => write!(f, "regular:{n}:{d}"),
            Self::ConnectedRegular { n, d } => write!(f, "connected-regular:{n}:{d}"),
        }
    }
}

/// Comma-separated list of specs.
pub fn parse_mix(s: &str) -> Result<Vec<GeneratorSpec>, SpecError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in [
            "hypercube:3",
            "random:10:0.4",
            "regular:8:3",
            "connected-regular:12:3",
            "nonregular:7:0.5",
            "star:5",
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(parse_mix("cycle:5, path:3").unwrap().len(), 2);
    }

    #[test]
    fn parse_errors_name_the_token() {
        let e = "random:ten:0.4".parse::<GeneratorSpec>().unwrap_err();
        assert!(e.reason.contains("`ten`"), "{e}");
        let e = "random:10:1.5".parse::<GeneratorSpec>().unwrap_err();
        assert!(e.reason.contains("`1.5`"), "{e}");
        let e = "wheel:5".parse::<GeneratorSpec>().unwrap_err();
        assert!(e.reason.contains("`wheel`"), "{e}");
        assert!("cycle".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn infeasible_specs() {
        let spec: GeneratorSpec = "regular:5:3".parse().unwrap();
        assert!(matches!(spec.check(), Err(GraphError::InvalidParameter(_))));
        assert!("connected-regular:6:1"
            .parse::<GeneratorSpec>()
            .unwrap()
            .check()
            .is_err());
        assert!("nonregular:2:0.5"
            .parse::<GeneratorSpec>()
            .unwrap()
            .check()
            .is_err());
    }

    #[test]
    fn conditioned_generators() {
        for seed in 0..30 {
            let g = GeneratorSpec::Nonregular { n: 8, p: 0.4 }
                .generate(seed)
                .unwrap();
            assert!(g.is_connected() && !g.is_regular());
            let h = GeneratorSpec::ConnectedRegular { n: 10, d: 3 }
                .generate(seed)
                .unwrap();
            assert!(h.is_connected() && h.is_regular() && h.min_degree() == 3);
        }
    }
}
