//! Pass/fail records for the identity and oracle checks.

use std::fmt::Display;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// An ordered list of checks. `overall()` holds iff every check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check that passes when the two renderings are equal.
    pub fn compare(
        &mut self,
        name: &str,
        params: impl Display,
        expected: impl Display,
        actual: impl Display,
    ) -> bool {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.to_owned(),
            params: params.to_string(),
            expected,
            actual,
            pass,
        });
        pass
    }

    pub fn append(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            overall: bool,
            checks: &'a [Check],
        }
        Wire {
            overall: self.overall(),
            checks: &self.checks,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_tracks_failures() {
        let mut r = VerificationReport::new();
        assert!(r.overall());
        assert!(r.compare("a", "m=1", 4, "4"));
        assert!(r.overall());
        assert!(!r.compare("b", "m=2", 80, 81));
        assert!(!r.overall());
        assert_eq!(r.failures().count(), 1);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["overall"], false);
        assert_eq!(json["checks"][1]["actual"], "81");
    }
}
