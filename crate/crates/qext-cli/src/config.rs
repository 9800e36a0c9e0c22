//! Run configuration shared by all commands.

use std::path::PathBuf;

use qext::scalar::is_prime;

/// Primes with a compiled field implementation.
pub const SUPPORTED_PRIMES: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FieldChoice {
    pub fn parse(s: &str) -> anyhow::Result<Self> {
        let t = s.trim();
        if matches!(t, "Q" | "q" | "QQ" | "rational" | "rationals" | "0") {
            return Ok(FieldChoice::Rational);
        }
        let digits = t.trim_start_matches(['F', 'f', 'p', 'P']).trim_start_matches('_');
        let p: u64 = digits.parse().map_err(|_| anyhow::anyhow!("unknown field {s:?}; use Q or a prime"))?;
        if !is_prime(p) {
            anyhow::bail!("field characteristic {p} is not prime");
        }
        if !SUPPORTED_PRIMES.contains(&p) {
            anyhow::bail!("prime {p} is not supported; choose one of {SUPPORTED_PRIMES:?}");
        }
        Ok(FieldChoice::Prime(p))
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: FieldChoice,
    pub cutoff: usize,
    pub max_arity: Option<usize>,
    pub grading: Option<String>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Validates the field and `cutoff ≥ max_arity + 2`.
    pub fn new(
        field: &str,
        cutoff: usize,
        max_arity: Option<usize>,
        grading: Option<String>,
        out: Option<PathBuf>,
    ) -> anyhow::Result<Self> {
        let field = FieldChoice::parse(field)?;
        if let Some(m) = max_arity {
            if m < 2 {
                anyhow::bail!("max arity must be at least 2");
            }
            if cutoff < m + 2 {
                anyhow::bail!("cutoff {cutoff} must be at least max arity + 2 = {}", m + 2);
            }
        }
        Ok(RunConfig { field, cutoff, max_arity, grading, out })
    }

    /// The configured max arity or `default`, checked against the cutoff.
    pub fn arity(&self, default: usize) -> anyhow::Result<usize> {
        let m = self.max_arity.unwrap_or(default);
        if self.cutoff < m + 2 {
            anyhow::bail!("cutoff {} must be at least max arity + 2 = {}", self.cutoff, m + 2);
        }
        Ok(m)
    }
}

macro_rules! dispatch_prime {
    ($p:expr, $F:ident => $body:expr) => {
        match $p {
            2 => { type $F = qext::Fp<2>; $body }
            3 => { type $F = qext::Fp<3>; $body }
            5 => { type $F = qext::Fp<5>; $body }
            7 => { type $F = qext::Fp<7>; $body }
            11 => { type $F = qext::Fp<11>; $body }
            13 => { type $F = qext::Fp<13>; $body }
            17 => { type $F = qext::Fp<17>; $body }
            19 => { type $F = qext::Fp<19>; $body }
            23 => { type $F = qext::Fp<23>; $body }
            29 => { type $F = qext::Fp<29>; $body }
            31 => { type $F = qext::Fp<31>; $body }
            p => unreachable!("prime {p} passed validation but has no field"),
        }
    };
}
pub(crate) use dispatch_prime;

/// Monomorphize a generic call over the configured field.
macro_rules! with_field {
    ($field:expr, $F:ident => $body:expr) => {
        match $field {
            $crate::config::FieldChoice::Rational => {
                type $F = qext::Rational;
                $body
            }
            $crate::config::FieldChoice::Prime(p) => $crate::config::dispatch_prime!(p, $F => $body),
        }
    };
}
pub(crate) use with_field;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert_eq!(FieldChoice::parse("Q").unwrap(), FieldChoice::Rational);
        assert_eq!(FieldChoice::parse("7").unwrap(), FieldChoice::Prime(7));
        assert_eq!(FieldChoice::parse("F5").unwrap(), FieldChoice::Prime(5));
        assert!(FieldChoice::parse("9").is_err());
        assert!(FieldChoice::parse("x").is_err());
    }

    #[test]
    fn cutoff_must_cover_arity() {
        assert!(RunConfig::new("Q", 5, Some(4), None, None).is_err());
        assert!(RunConfig::new("Q", 6, Some(4), None, None).is_ok());
        let cfg = RunConfig::new("Q", 2, None, None, None).unwrap();
        assert!(cfg.arity(4).is_err());
        assert_eq!(RunConfig::new("Q", 8, None, None, None).unwrap().arity(4).unwrap(), 4);
    }
}
