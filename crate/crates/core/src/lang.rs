use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Language of a token or sentence.
///
/// `Neutral` covers punctuation, digits, symbols, URLs and e-mail addresses;
/// such tokens never enter a language-proportion denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LanguageTag {
    #[serde(rename = "LU")]
    Lu,
    #[serde(rename = "DE")]
    De,
    #[serde(rename = "FR")]
    Fr,
    #[serde(rename = "EN")]
    En,
    #[serde(rename = "OTHER")]
    Other,
    #[serde(rename = "NEUTRAL")]
    Neutral,
}

impl LanguageTag {
    /// The four languages of the mixing inventory, in reporting order.
    pub const INVENTORY: [LanguageTag; 4] = [
        LanguageTag::Lu,
        LanguageTag::De,
        LanguageTag::Fr,
        LanguageTag::En,
    ];

    pub fn code(self) -> &'static str {
        match self {
            LanguageTag::Lu => "LU",
            LanguageTag::De => "DE",
            LanguageTag::Fr => "FR",
            LanguageTag::En => "EN",
            LanguageTag::Other => "OTHER",
            LanguageTag::Neutral => "NEUTRAL",
        }
    }

    /// Position in [`LanguageTag::INVENTORY`], if the tag belongs to it.
    pub fn inventory_index(self) -> Option<usize> {
        match self {
            LanguageTag::Lu => Some(0),
            LanguageTag::De => Some(1),
            LanguageTag::Fr => Some(2),
            LanguageTag::En => Some(3),
            _ => None,
        }
    }

    /// Tags that form foreign runs inside a Luxembourgish sentence.
    pub fn is_foreign(self) -> bool {
        !matches!(self, LanguageTag::Lu | LanguageTag::Neutral)
    }
}

impl fmt::Display for LanguageTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for LanguageTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "LU" | "LB" | "LTZ" => Ok(LanguageTag::Lu),
            "DE" => Ok(LanguageTag::De),
            "FR" => Ok(LanguageTag::Fr),
            "EN" => Ok(LanguageTag::En),
            "OTHER" => Ok(LanguageTag::Other),
            "NEUTRAL" => Ok(LanguageTag::Neutral),
            other => Err(format!("unknown language tag {other:?}")),
        }
    }
}

/// A donor language of the loanword lexicon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Donor {
    #[serde(rename = "DE")]
    De,
    #[serde(rename = "FR")]
    Fr,
    #[serde(rename = "EN")]
    En,
}

impl Donor {
    pub const ALL: [Donor; 3] = [Donor::De, Donor::Fr, Donor::En];

    pub fn code(self) -> &'static str {
        match self {
            Donor::De => "DE",
            Donor::Fr => "FR",
            Donor::En => "EN",
        }
    }

    pub fn tag(self) -> LanguageTag {
        match self {
            Donor::De => LanguageTag::De,
            Donor::Fr => LanguageTag::Fr,
            Donor::En => LanguageTag::En,
        }
    }

    pub fn from_tag(tag: LanguageTag) -> Option<Donor> {
        match tag {
            LanguageTag::De => Some(Donor::De),
            LanguageTag::Fr => Some(Donor::Fr),
            LanguageTag::En => Some(Donor::En),
            _ => None,
        }
    }

    pub fn loan_label(self) -> LoanLabel {
        match self {
            Donor::De => LoanLabel::DeLoan,
            Donor::Fr => LoanLabel::FrLoan,
            Donor::En => LoanLabel::EnLoan,
        }
    }
}

impl fmt::Display for Donor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Donor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "DE" => Ok(Donor::De),
            "FR" => Ok(Donor::Fr),
            "EN" => Ok(Donor::En),
            other => Err(format!("unknown donor language {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub enum LoanLabel {
    #[serde(rename = "NATIVE")]
    Native,
    #[serde(rename = "FR_LOAN")]
    FrLoan,
    #[serde(rename = "DE_LOAN")]
    DeLoan,
    #[serde(rename = "EN_LOAN")]
    EnLoan,
    #[default]
    #[serde(rename = "UNSET")]
    Unset,
}

impl LoanLabel {
    pub fn donor(self) -> Option<Donor> {
        match self {
            LoanLabel::FrLoan => Some(Donor::Fr),
            LoanLabel::DeLoan => Some(Donor::De),
            LoanLabel::EnLoan => Some(Donor::En),
            LoanLabel::Native | LoanLabel::Unset => None,
        }
    }

    pub fn is_loan(self) -> bool {
        self.donor().is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub enum MixingRole {
    #[serde(rename = "MATRIX")]
    Matrix,
    #[serde(rename = "BORROWING")]
    Borrowing,
    #[serde(rename = "CODE_SWITCH")]
    CodeSwitch,
    #[serde(rename = "AMBIGUOUS")]
    Ambiguous,
    #[serde(rename = "NEUTRAL")]
    Neutral,
    #[default]
    #[serde(rename = "UNSET")]
    Unset,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip_through_serde() {
        for tag in [
            LanguageTag::Lu,
            LanguageTag::De,
            LanguageTag::Fr,
            LanguageTag::En,
            LanguageTag::Other,
            LanguageTag::Neutral,
        ] {
            let json = serde_json::to_string(&tag).unwrap();
            assert_eq!(json, format!("\"{}\"", tag.code()));
            assert_eq!(tag.code().parse::<LanguageTag>().unwrap(), tag);
        }
        let label: LoanLabel = serde_json::from_str("\"FR_LOAN\"").unwrap();
        assert_eq!(label.donor(), Some(Donor::Fr));
    }
}
