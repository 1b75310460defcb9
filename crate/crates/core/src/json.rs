//! JSON shapes shared by the reports. Integers are decimal strings.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: String,
    pub den: String,
}

pub fn ratio(r: &BigRational) -> Ratio {
    Ratio {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}
