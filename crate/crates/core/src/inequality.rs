//! Exact comparison reports shared by the inequality checks.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::{Rational, Surd};

/// Outcome of comparing lhs with rhs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

/// What a scenario expects; `<=` accepts both `<` and `=`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpectedRelation {
    Less,
    Equal,
    Greater,
    LessOrEqual,
    GreaterOrEqual,
}

impl ExpectedRelation {
    pub fn accepts(self, r: Relation) -> bool {
        match self {
            ExpectedRelation::Less => r == Relation::Less,
            ExpectedRelation::Equal => r == Relation::Equal,
            ExpectedRelation::Greater => r == Relation::Greater,
            ExpectedRelation::LessOrEqual => r != Relation::Greater,
            ExpectedRelation::GreaterOrEqual => r != Relation::Less,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ExpectedRelation::Less => "<",
            ExpectedRelation::Equal => "=",
            ExpectedRelation::Greater => ">",
            ExpectedRelation::LessOrEqual => "<=",
            ExpectedRelation::GreaterOrEqual => ">=",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl fmt::Display for ExpectedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "<" => Ok(Relation::Less),
            "=" => Ok(Relation::Equal),
            ">" => Ok(Relation::Greater),
            other => Err(Error::Parse(format!("unknown relation {other:?}"))),
        }
    }
}

impl FromStr for ExpectedRelation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "<" => Ok(ExpectedRelation::Less),
            "=" => Ok(ExpectedRelation::Equal),
            ">" => Ok(ExpectedRelation::Greater),
            "<=" | "≤" => Ok(ExpectedRelation::LessOrEqual),
            ">=" | "≥" => Ok(ExpectedRelation::GreaterOrEqual),
            other => Err(Error::Parse(format!("unknown relation {other:?}"))),
        }
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                serializer.serialize_str(self.symbol())
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(Relation);
string_serde!(ExpectedRelation);

/// An exact comparison lhs ? constant·product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub lhs: Rational,
    /// The right-hand side before the constant is applied.
    pub product: Rational,
    pub constant: Surd,
    pub rhs: Surd,
    pub relation: Relation,
    /// lhs / rhs, absent when rhs = 0.
    pub ratio: Option<Surd>,
    /// Short description of the inequality being checked.
    pub claim: String,
}

impl InequalityReport {
    pub fn new(lhs: Rational, product: Rational, constant: Surd, claim: impl Into<String>) -> Self {
        let rhs = constant.mul_rational(&product);
        let lhs_s = Surd::rational(lhs.clone());
        let relation = Relation::from_ordering(lhs_s.cmp(&rhs));
        let ratio = lhs_s.checked_div(&rhs).ok();
        InequalityReport {
            lhs,
            product,
            constant,
            rhs,
            relation,
            ratio,
            claim: claim.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.relation != Relation::Greater
    }
}
