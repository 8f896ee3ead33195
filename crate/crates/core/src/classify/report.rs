use std::fmt;

use serde::Serialize;

use super::Verdict;
use crate::ideal::Ideal;

/// The six verdicts, in fixed serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub prime: Verdict,
    pub maximal: Verdict,
    pub primary: Verdict,
    pub one_absorbing_primary: Verdict,
    pub two_absorbing_primary: Verdict,
    pub two_absorbing: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub ideal: String,
    pub radical: String,
    pub properties: Properties,
    /// False only when the fast path and the oracle both ran and disagree.
    pub agreement: bool,
}

impl ClassificationReport {
    pub(crate) fn new(ideal: &Ideal, verdicts: Vec<Verdict>, agreement: bool) -> Self {
        let [prime, maximal, primary, one_absorbing_primary, two_absorbing_primary, two_absorbing]: [Verdict; 6] =
            verdicts.try_into().expect("six verdicts");
        ClassificationReport {
            ring: ideal.ring().to_string(),
            ideal: ideal.to_string(),
            radical: ideal.radical().to_string(),
            properties: Properties {
                prime,
                maximal,
                primary,
                one_absorbing_primary,
                two_absorbing_primary,
                two_absorbing,
            },
            agreement,
        }
    }

    pub fn verdicts(&self) -> [(&'static str, &Verdict); 6] {
        let p = &self.properties;
        [
            ("prime", &p.prime),
            ("maximal", &p.maximal),
            ("primary", &p.primary),
            ("one_absorbing_primary", &p.one_absorbing_primary),
            ("two_absorbing_primary", &p.two_absorbing_primary),
            ("two_absorbing", &p.two_absorbing),
        ]
    }
}

impl fmt::Display for ClassificationReport {
    /// One line: `ring ideal: radical ...; prime ...; ...; agreement ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: radical {}", self.ring, self.ideal, self.radical)?;
        for (name, v) in self.verdicts() {
            write!(f, "; {name} {v}")?;
        }
        write!(f, "; agreement {}", self.agreement)
    }
}
