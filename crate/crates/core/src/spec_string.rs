//! Textual semigroup specs: comma-separated generators with an optional
//! `@r` threshold suffix, e.g. `6,8,35` or `162,1114,1115@9879`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSpec {
    pub generators: Vec<u64>,
    pub threshold: Option<u64>,
}

impl SemigroupSpec {
    pub fn build(&self) -> Result<NumericalSemigroup> {
        match self.threshold {
            Some(r) => NumericalSemigroup::from_generators_with_threshold(&self.generators, r),
            None => NumericalSemigroup::from_generators(&self.generators),
        }
    }
}

fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse { input: input.to_string(), reason: reason.into() }
}

fn parse_positive(input: &str, token: &str) -> Result<u64> {
    match token.parse::<u64>() {
        Ok(0) => Err(Error::NonPositiveGenerator(0)),
        Ok(v) => Ok(v),
        Err(_) => Err(parse_error(input, format!("{token:?} is not a positive integer"))),
    }
}

/// Parses a comma-separated list of integers (signs allowed), ignoring whitespace.
pub fn parse_int_list(input: &str) -> Result<Vec<i64>> {
    let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::EmptyInput);
    }
    cleaned
        .split(',')
        .map(|t| t.parse::<i64>().map_err(|_| parse_error(input, format!("{t:?} is not an integer"))))
        .collect()
}

impl FromStr for SemigroupSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let (gens, threshold) = match cleaned.split_once('@') {
            Some((g, r)) => {
                if r.contains('@') {
                    return Err(parse_error(input, "more than one '@'"));
                }
                (g, Some(parse_positive(input, r)?))
            }
            None => (cleaned.as_str(), None),
        };
        let generators = if gens.is_empty() {
            if threshold.is_none() {
                return Err(Error::EmptyInput);
            }
            Vec::new()
        } else {
            gens.split(',').map(|t| parse_positive(input, t)).collect::<Result<Vec<_>>>()?
        };
        Ok(SemigroupSpec { generators, threshold })
    }
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "{}", gens.join(","))?;
        if let Some(r) = self.threshold {
            write!(f, "@{r}")?;
        }
        Ok(())
    }
}

/// Parses and builds in one step.
pub fn parse_semigroup(input: &str) -> Result<NumericalSemigroup> {
    input.parse::<SemigroupSpec>()?.build()
}
