//! Reference parameter sets with the properties stated for them, used by the
//! `example` subcommand and the acceptance tests.

use crate::analysis::{report_constructed, CodeReport, Optimality};
use crate::constructions::{
    binary_construction2, qary_lrc_lcd_even, qary_lrc_lcd_general, Constructed,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub k: usize,
    pub r: usize,
    pub d_lower: usize,
    /// Exact value where a claim pins it.
    pub d_upper: Option<i64>,
    pub optimality: Option<Optimality>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub id: &'static str,
    pub summary: &'static str,
    pub expected: Expected,
}

pub const FIXTURES: [Fixture; 6] = [
    Fixture {
        id: "3.1",
        summary: "binary n=63, r=2, cosets [1] and [62]",
        expected: Expected {
            k: 30,
            r: 2,
            d_lower: 10,
            d_upper: None,
            optimality: None,
        },
    },
    Fixture {
        id: "3.2",
        summary: "binary n=255, r=4, cosets [1], [254], [3], [252]",
        expected: Expected {
            k: 172,
            r: 4,
            d_lower: 14,
            d_upper: None,
            optimality: None,
        },
    },
    Fixture {
        id: "3.3",
        summary: "GF(37), n=36, k=20, r=5, even gap",
        expected: Expected {
            k: 20,
            r: 5,
            d_lower: 14,
            d_upper: Some(14),
            optimality: Some(Optimality::Optimal),
        },
    },
    Fixture {
        id: "3.4",
        summary: "GF(17), n=16, k=8, r=3, a=2",
        expected: Expected {
            k: 8,
            r: 3,
            d_lower: 6,
            d_upper: Some(7),
            optimality: Some(Optimality::WithinOne),
        },
    },
    Fixture {
        id: "3.5a",
        summary: "GF(67), n=66, k=35, r=5, a=0",
        expected: Expected {
            k: 35,
            r: 5,
            d_lower: 26,
            d_upper: Some(26),
            optimality: Some(Optimality::Optimal),
        },
    },
    Fixture {
        id: "3.5b",
        summary: "GF(67), n=66, k=37, r=5, a=4",
        expected: Expected {
            k: 37,
            r: 5,
            d_lower: 22,
            d_upper: Some(23),
            optimality: Some(Optimality::WithinOne),
        },
    },
];

pub fn fixture(id: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::ParameterViolation(format!("unknown example {id:?}")))
}

impl Fixture {
    pub fn construct(&self) -> Result<Constructed> {
        match self.id {
            "3.1" => binary_construction2(6, 2, None),
            "3.2" => binary_construction2(8, 4, Some(&[1, 254, 3, 252])),
            "3.3" => qary_lrc_lcd_even(37, 36, 20, 5),
            "3.4" => qary_lrc_lcd_general(17, 16, 8, 3),
            "3.5a" => qary_lrc_lcd_general(67, 66, 35, 5),
            "3.5b" => qary_lrc_lcd_general(67, 66, 37, 5),
            other => Err(Error::ParameterViolation(format!(
                "unknown example {other:?}"
            ))),
        }
    }

    /// Builds the code, reports on it, and checks every stated property.
    pub fn reproduce(&self, budget: u64) -> Result<CodeReport> {
        let report = report_constructed(&self.construct()?, budget)?;
        let e = &self.expected;
        let fail = |what: &str, got: String, want: String| {
            Err(Error::AssertionFailed(format!(
                "example {}: {what} = {got}, expected {want}",
                self.id
            )))
        };
        if report.k != e.k {
            return fail("k", report.k.to_string(), e.k.to_string());
        }
        if !report.lcd.is_lcd {
            return fail("lcd", "false".into(), "true".into());
        }
        if report.r_verified != Some(e.r) {
            return fail(
                "r_verified",
                format!("{:?}", report.r_verified),
                e.r.to_string(),
            );
        }
        if report.d_lower != e.d_lower {
            return fail("d_lower", report.d_lower.to_string(), e.d_lower.to_string());
        }
        if let Some(up) = e.d_upper {
            if report.d_upper != up {
                return fail("d_upper", report.d_upper.to_string(), up.to_string());
            }
        }
        if let Some(opt) = e.optimality {
            if report.optimality != opt {
                return fail("optimality", report.optimality.to_string(), opt.to_string());
            }
        }
        Ok(report)
    }
}
