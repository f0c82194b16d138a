use std::fmt;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label given to dates outside every interval of a scheme.
pub const OTHER_PERIOD: &str = "OTHER";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Period {
    pub label: String,
    pub start: NaiveDate,
    /// Inclusive.
    pub end: NaiveDate,
}

/// Named, ordered, non-overlapping date intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodScheme {
    pub name: String,
    pub periods: Vec<Period>,
}

fn ymd(y: i32, m: u32, d: u32) -> NaiveDate {
    NaiveDate::from_ymd_opt(y, m, d).expect("valid built-in date")
}

fn years(name: &str, spans: &[(i32, i32)]) -> PeriodScheme {
    PeriodScheme {
        name: name.to_owned(),
        periods: spans
            .iter()
            .map(|&(a, b)| Period {
                label: if a == b { a.to_string() } else { format!("{a}-{b}") },
                start: ymd(a, 1, 1),
                end: ymd(b, 12, 31),
            })
            .collect(),
    }
}

impl PeriodScheme {
    pub const BUILTIN: [&'static str; 2] = ["six", "five"];

    /// The six socio-historical periods.
    pub fn six() -> PeriodScheme {
        years("six", &[(1999, 2007), (2008, 2011), (2012, 2019), (2020, 2020), (2021, 2021), (2022, 2025)])
    }

    /// Five-year analytical intervals, the last one six years long.
    pub fn five() -> PeriodScheme {
        years("five", &[(1999, 2004), (2005, 2009), (2010, 2014), (2015, 2019), (2020, 2025)])
    }

    pub fn builtin(name: &str) -> Result<PeriodScheme> {
        match name {
            "six" => Ok(PeriodScheme::six()),
            "five" => Ok(PeriodScheme::five()),
            other => Err(Error::Config(format!(
                "unknown period scheme {other:?}; built-in schemes: {}",
                PeriodScheme::BUILTIN.join(", ")
            ))),
        }
    }

    pub fn new(name: impl Into<String>, periods: Vec<Period>) -> Result<PeriodScheme> {
        let scheme = PeriodScheme {
            name: name.into(),
            periods,
        };
        scheme.validate()?;
        Ok(scheme)
    }

    pub fn validate(&self) -> Result<()> {
        if self.periods.is_empty() {
            return Err(Error::Config(format!("period scheme {} is empty", self.name)));
        }
        for p in &self.periods {
            if p.start > p.end || p.label == OTHER_PERIOD || p.label.is_empty() {
                return Err(Error::Config(format!("bad period {p:?} in scheme {}", self.name)));
            }
        }
        for w in self.periods.windows(2) {
            if w[0].end >= w[1].start {
                return Err(Error::Config(format!(
                    "periods {} and {} of scheme {} overlap or are out of order",
                    w[0].label, w[1].label, self.name
                )));
            }
        }
        Ok(())
    }

    /// Label of the interval containing `date`, or `OTHER` with a warning.
    pub fn bucket(&self, date: NaiveDate) -> &str {
        match self.find(date) {
            Some(p) => &p.label,
            None => {
                log::warn!("{date} lies outside period scheme {}", self.name);
                OTHER_PERIOD
            }
        }
    }

    pub(crate) fn find(&self, date: NaiveDate) -> Option<&Period> {
        let i = self.periods.partition_point(|p| p.end < date);
        self.periods.get(i).filter(|p| p.start <= date)
    }

    /// Period labels in chronological order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.periods.iter().map(|p| p.label.as_str())
    }
}

impl fmt::Display for PeriodScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
