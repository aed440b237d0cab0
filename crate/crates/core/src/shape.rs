//! Recognizes which family of mixed product ideal a normalized
//! [`MixedSpec`] belongs to.

use crate::ideal::MixedSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Zero,
    Unit,
    /// `I_q`, `q >= 1`.
    XPower(u32),
    /// `J_r`, `r >= 1`.
    YPower(u32),
    /// `I_q J_r`, `q, r >= 1`.
    Product {
        q: u32,
        r: u32,
    },
    /// `I_q J_r + I_s J_t` with `q < s` and `t < r`; `q` or `t` may be 0.
    TwoTerm {
        q: u32,
        r: u32,
        s: u32,
        t: u32,
    },
    /// `I_s + I_q J_t + J_r` with `1 <= q < s` and `1 <= t < r`.
    ThreeTerm {
        q: u32,
        r: u32,
        s: u32,
        t: u32,
    },
    Other,
}

impl Shape {
    pub fn of(spec: &MixedSpec) -> Shape {
        match *spec.terms() {
            [] => Shape::Zero,
            [(0, 0)] => Shape::Unit,
            [(q, 0)] => Shape::XPower(q),
            [(0, r)] => Shape::YPower(r),
            [(q, r)] => Shape::Product { q, r },
            // Normalization sorts by q and removes dominated terms, so q < s
            // and t < r hold automatically.
            [(q, r), (s, t)] => Shape::TwoTerm { q, r, s, t },
            [(0, r), (q, t), (s, 0)] => Shape::ThreeTerm { q, r, s, t },
            _ => Shape::Other,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Shape::Zero => "zero ideal",
            Shape::Unit => "unit ideal",
            Shape::XPower(_) | Shape::YPower(_) => "I_q",
            Shape::Product { .. } => "I_q J_r",
            Shape::TwoTerm { q: 0, t: 0, .. } => "I_s + J_r",
            Shape::TwoTerm { .. } => "I_q J_r + I_s J_t",
            Shape::ThreeTerm { .. } => "I_s + I_q J_t + J_r",
            Shape::Other => "sum of more than three products",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::GroundSet;

    fn shape(terms: &[(u32, u32)]) -> Shape {
        Shape::of(&MixedSpec::new(
            GroundSet::new(4, 4).unwrap(),
            terms.iter().copied(),
        ))
    }

    #[test]
    fn recognizes_families() {
        assert_eq!(shape(&[]), Shape::Zero);
        assert_eq!(shape(&[(0, 0), (2, 2)]), Shape::Unit);
        assert_eq!(shape(&[(2, 0)]), Shape::XPower(2));
        assert_eq!(shape(&[(0, 3)]), Shape::YPower(3));
        assert_eq!(shape(&[(2, 3)]), Shape::Product { q: 2, r: 3 });
        assert_eq!(
            shape(&[(3, 1), (1, 3)]),
            Shape::TwoTerm {
                q: 1,
                r: 3,
                s: 3,
                t: 1
            }
        );
        assert_eq!(
            shape(&[(2, 0), (0, 1)]),
            Shape::TwoTerm {
                q: 0,
                r: 1,
                s: 2,
                t: 0
            }
        );
        assert_eq!(
            shape(&[(3, 0), (2, 1), (0, 3)]),
            Shape::ThreeTerm {
                q: 2,
                r: 3,
                s: 3,
                t: 1
            }
        );
        assert_eq!(shape(&[(4, 0), (3, 1), (1, 2), (0, 4)]), Shape::Other);
        assert_eq!(shape(&[(3, 1), (2, 2), (1, 3)]), Shape::Other);
    }
}
