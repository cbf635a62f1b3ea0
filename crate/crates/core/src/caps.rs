use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Resource limits shared by the enumeration engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of minimal vertex covers enumerated.
    pub covers: usize,
    /// Maximum number of S-pairs processed by one Buchberger run.
    pub spairs: usize,
    /// Maximum number of standard monomials enumerated.
    pub std_monomials: usize,
    /// Maximum number of lattice points scanned by the integral closure.
    pub box_points: usize,
    /// Maximum number of candidate multidegrees visited by the Betti oracle.
    pub betti_points: usize,
    /// Maximum number of witness candidates per prime in the associated primes search.
    pub ass_search: usize,
}

pub const EXPONENT_CAP: u32 = 1 << 15;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            covers: 1 << 20,
            spairs: 100_000,
            std_monomials: 1_000_000,
            box_points: 10_000_000,
            betti_points: 1 << 22,
            ass_search: 1 << 22,
        }
    }
}

impl Caps {
    /// Applies overrides of the form `spairs=500,box=10000`.
    ///
    /// Recognised keys: `covers`, `spairs`, `std`, `box`, `betti`, `ass`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Caps> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| Error::Parse {
                location: "caps".into(),
                message: format!("expected key=value, got `{item}`"),
            })?;
            let value: usize = value.trim().parse().map_err(|_| Error::Parse {
                location: format!("caps.{}", key.trim()),
                message: format!("not a non-negative integer: `{}`", value.trim()),
            })?;
            match key.trim() {
                "covers" => self.covers = value,
                "spairs" => self.spairs = value,
                "std" => self.std_monomials = value,
                "box" => self.box_points = value,
                "betti" => self.betti_points = value,
                "ass" => self.ass_search = value,
                other => {
                    return Err(Error::Parse {
                        location: "caps".into(),
                        message: format!("unknown cap `{other}`"),
                    })
                }
            }
        }
        Ok(self)
    }

    /// Defaults overridden by the `COVERTOOL_CAPS` environment variable, if set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var("COVERTOOL_CAPS") {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default().with_overrides("spairs=7, box=9").unwrap();
        assert_eq!(caps.spairs, 7);
        assert_eq!(caps.box_points, 9);
        assert_eq!(caps.covers, Caps::default().covers);
    }

    #[test]
    fn overrides_reject_garbage() {
        assert!(Caps::default().with_overrides("spairs").is_err());
        assert!(Caps::default().with_overrides("nope=3").is_err());
        assert!(Caps::default().with_overrides("box=-1").is_err());
    }
}
