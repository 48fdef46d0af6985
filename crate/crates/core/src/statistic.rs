//! Permutation statistics that are linear combinations of vincular
//! 3-pattern counts, plus descents and ascents.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::character::CharacterCombination;
use crate::error::{Error, Result};
use crate::mset::mean_coefficients;
use crate::partition::IntegerPartition;
use crate::pattern::VincularPattern;
use crate::perm::Permutation;
use crate::rational::{format_rational, frac, int, parse_rational, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Pattern(VincularPattern),
    /// Indices `i` with `π(i−1) < π(i) > π(i+1)`.
    Peak,
    /// Indices `i` with `π(i) > π(i+1)`.
    Des,
    /// Indices `i` with `π(i) < π(i+1)`.
    Asc,
}

impl Statistic {
    pub fn evaluate(&self, pi: &Permutation) -> u64 {
        let w = pi.word();
        match self {
            Statistic::Pattern(phi) => phi.count_occurrences(pi),
            Statistic::Peak => w.windows(3).filter(|x| x[0] < x[1] && x[1] > x[2]).count() as u64,
            Statistic::Des => w.windows(2).filter(|x| x[0] > x[1]).count() as u64,
            Statistic::Asc => w.windows(2).filter(|x| x[0] < x[1]).count() as u64,
        }
    }

    /// Mean over each conjugacy class of `S_n` in the character basis.
    pub fn mean(&self, n: usize) -> Result<CharacterCombination> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        match self {
            Statistic::Pattern(phi) => mean_coefficients(phi, n),
            Statistic::Peak => {
                let mut c = mean_coefficients(&"(132)".parse()?, n)?;
                c.add_assign(&mean_coefficients(&"(231)".parse()?, n)?)?;
                Ok(c)
            }
            Statistic::Des | Statistic::Asc => {
                let sign = if *self == Statistic::Des { -1 } else { 1 };
                let nn = n as i64;
                let mut c = CharacterCombination::zero(n);
                c.add_term(IntegerPartition::with_first_row(n, &[]).expect("shape"), frac(nn - 1, 2))?;
                c.add_term(IntegerPartition::with_first_row(n, &[1]).expect("shape"), frac(sign, nn))?;
                c.add_term(IntegerPartition::with_first_row(n, &[1, 1]).expect("shape"), frac(sign, nn))?;
                Ok(c)
            }
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Pattern(p) => p.fmt(f),
            Statistic::Peak => f.write_str("peak"),
            Statistic::Des => f.write_str("des"),
            Statistic::Asc => f.write_str("asc"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "peak" => Ok(Statistic::Peak),
            "des" => Ok(Statistic::Des),
            "asc" => Ok(Statistic::Asc),
            _ if s.starts_with(['(', '[']) => Ok(Statistic::Pattern(s.parse()?)),
            _ => Err(Error::UnknownStatistic(s.to_string())),
        }
    }
}

/// `Σ c_i s_i` over builtin statistics and pattern counts.
///
/// Text form: terms separated by `;`, each `coef*item` or a bare `item`
/// (coefficient 1), e.g. `"peak"`, `"1/2*(1-2-3);-1*des"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeStatistic {
    pub terms: Vec<(ExactRational, Statistic)>,
}

impl CompositeStatistic {
    pub fn single(stat: Statistic) -> Self {
        Self { terms: vec![(ExactRational::one(), stat)] }
    }

    pub fn evaluate(&self, pi: &Permutation) -> ExactRational {
        self.terms
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, s)| c * int(s.evaluate(pi) as i64))
            .sum()
    }

    pub fn mean(&self, n: usize) -> Result<CharacterCombination> {
        composite_mean(&self.terms, n)
    }
}

impl From<Statistic> for CompositeStatistic {
    fn from(s: Statistic) -> Self {
        Self::single(s)
    }
}

impl From<VincularPattern> for CompositeStatistic {
    fn from(p: VincularPattern) -> Self {
        Self::single(Statistic::Pattern(p))
    }
}

impl fmt::Display for CompositeStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, s)| if c.is_one() { s.to_string() } else { format!("{}*{}", format_rational(c), s) })
            .collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for CompositeStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::UnknownStatistic(String::new()));
        }
        let terms = s
            .split(';')
            .map(|term| match term.split_once('*') {
                Some((c, item)) => Ok((parse_rational(c)?, item.parse()?)),
                None => Ok((ExactRational::one(), term.parse()?)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { terms })
    }
}

/// Mean of `Σ c_i s_i` as `Σ c_i · mean(s_i)`.
pub fn composite_mean(terms: &[(ExactRational, Statistic)], n: usize) -> Result<CharacterCombination> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut out = CharacterCombination::zero(n);
    for (c, s) in terms {
        if c.is_zero() {
            continue;
        }
        out.add_assign(&s.mean(n)?.scaled(c))?;
    }
    Ok(out)
}
