use serde::Serialize;

use crate::arith::QuadraticNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SturmVerdict {
    pub is_quadratic_irrational: bool,
    pub epsilon_in_unit_interval: bool,
    pub conjugate_outside_unit_interval: bool,
    pub is_sturm: bool,
}

fn in_open_unit_interval(x: &QuadraticNumber) -> bool {
    x.is_positive() && (QuadraticNumber::one() - x).is_positive()
}

/// A quadratic irrational `ε ∈ (0,1)` whose conjugate `ε′ ∉ (0,1)`.
pub fn is_sturm(x: &QuadraticNumber) -> SturmVerdict {
    let is_quadratic_irrational = !x.is_rational();
    let epsilon_in_unit_interval = in_open_unit_interval(x);
    let conjugate_outside_unit_interval = !in_open_unit_interval(&x.conjugate());
    SturmVerdict {
        is_quadratic_irrational,
        epsilon_in_unit_interval,
        conjugate_outside_unit_interval,
        is_sturm: is_quadratic_irrational
            && epsilon_in_unit_interval
            && conjugate_outside_unit_interval,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sturm(s: &str) -> SturmVerdict {
        is_sturm(&s.parse().unwrap())
    }

    #[test]
    fn examples() {
        assert!(sturm("(-1+sqrt(5))/2").is_sturm);
        assert!(sturm("(sqrt(2))/2").is_sturm);
        let v = sturm("(2-sqrt(2))/4");
        assert!(v.is_quadratic_irrational && v.epsilon_in_unit_interval);
        assert!(!v.conjugate_outside_unit_interval && !v.is_sturm);
        let half = sturm("1/2");
        assert!(!half.is_quadratic_irrational && !half.is_sturm);
        assert!(!sturm("sqrt(5)").is_sturm);
    }
}
