use std::fmt;
use std::str::FromStr;

use crate::RealFormError;

/// Largest supported matrix size.
pub const MAX_MATRIX_SIZE: usize = 8;

/// A classical real form in its standard matrix presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealFormSpec {
    Su {
        p: usize,
        q: usize,
    },
    /// `sl_n(H)`, realized in `sl_{2n}(C)`.
    SlH {
        n: usize,
    },
    So {
        p: usize,
        q: usize,
    },
    CompactU {
        n: usize,
    },
    CompactSu {
        n: usize,
    },
    CompactSo {
        n: usize,
    },
    /// Compact `sp_n`, realized in `gl_{2n}`.
    CompactSp {
        n: usize,
    },
}

impl RealFormSpec {
    /// Size of the matrices.
    pub fn matrix_size(&self) -> usize {
        match *self {
            RealFormSpec::Su { p, q } | RealFormSpec::So { p, q } => p + q,
            RealFormSpec::SlH { n } | RealFormSpec::CompactSp { n } => 2 * n,
            RealFormSpec::CompactU { n } | RealFormSpec::CompactSu { n } | RealFormSpec::CompactSo { n } => n,
        }
    }

    pub fn is_compact(&self) -> bool {
        matches!(
            self,
            RealFormSpec::CompactU { .. }
                | RealFormSpec::CompactSu { .. }
                | RealFormSpec::CompactSo { .. }
                | RealFormSpec::CompactSp { .. }
        )
    }

    pub fn validate(&self) -> Result<(), RealFormError> {
        let n = self.matrix_size();
        if n > MAX_MATRIX_SIZE {
            return Err(RealFormError::Unsupported(format!("{self}: matrix size {n} exceeds {MAX_MATRIX_SIZE}")));
        }
        let ok = match *self {
            RealFormSpec::Su { p, q } => p >= 1 && q >= 1,
            RealFormSpec::So { p, q } => p >= 1 && q >= 1 && p + q >= 5,
            RealFormSpec::SlH { n } => n >= 1,
            RealFormSpec::CompactU { n } => n >= 1,
            RealFormSpec::CompactSu { n } => n >= 2,
            RealFormSpec::CompactSo { n } => n >= 5,
            RealFormSpec::CompactSp { n } => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(RealFormError::Unsupported(format!("{self}: parameters out of range")))
        }
    }
}

impl fmt::Display for RealFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealFormSpec::Su { p, q } => write!(f, "su:{p},{q}"),
            RealFormSpec::SlH { n } => write!(f, "slH:{n}"),
            RealFormSpec::So { p, q } => write!(f, "so:{p},{q}"),
            RealFormSpec::CompactU { n } => write!(f, "compact-u:{n}"),
            RealFormSpec::CompactSu { n } => write!(f, "compact-su:{n}"),
            RealFormSpec::CompactSo { n } => write!(f, "compact-so:{n}"),
            RealFormSpec::CompactSp { n } => write!(f, "compact-sp:{n}"),
        }
    }
}

impl FromStr for RealFormSpec {
    type Err = RealFormError;

    fn from_str(s: &str) -> Result<Self, RealFormError> {
        let bad = || RealFormError::Parse(s.to_string());
        let (family, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> =
            params.split(',').map(|t| t.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let spec = match (family.trim(), nums.as_slice()) {
            ("su", &[p, q]) => RealFormSpec::Su { p, q },
            ("so", &[p, q]) => RealFormSpec::So { p, q },
            ("slH", &[n]) => RealFormSpec::SlH { n },
            ("compact-u", &[n]) => RealFormSpec::CompactU { n },
            ("compact-su", &[n]) => RealFormSpec::CompactSu { n },
            ("compact-so", &[n]) => RealFormSpec::CompactSo { n },
            ("compact-sp", &[n]) => RealFormSpec::CompactSp { n },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["su:2,3", "slH:2", "so:3,5", "compact-so:7", "compact-sp:2", "compact-u:3", "compact-su:4"] {
            assert_eq!(s.parse::<RealFormSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects() {
        for s in ["su:2", "sl:3", "so:1,2", "compact-so:9", "su:a,b", "slH:5"] {
            assert!(s.parse::<RealFormSpec>().is_err(), "{s}");
        }
    }
}
