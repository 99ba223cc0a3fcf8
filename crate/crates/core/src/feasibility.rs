//! Two-variable linear feasibility by Fourier–Motzkin elimination.

use alloc::vec::Vec;

use crate::golden::GoldenNumber;

/// The constraint `a·s + b·t ≤ c` (or `< c` when strict).
#[derive(Clone, Debug)]
pub struct HalfPlane {
    pub a: GoldenNumber,
    pub b: GoldenNumber,
    pub c: GoldenNumber,
    pub strict: bool,
}

impl HalfPlane {
    pub fn new(a: GoldenNumber, b: GoldenNumber, c: GoldenNumber, strict: bool) -> Self {
        HalfPlane { a, b, c, strict }
    }
}

struct Bound {
    value: GoldenNumber,
    strict: bool,
}

// Keeps the tightest bound; on ties a strict bound wins.
fn tighten(slot: &mut Option<Bound>, value: GoldenNumber, strict: bool, lower: bool) {
    match slot {
        None => *slot = Some(Bound { value, strict }),
        Some(b) => {
            let ord = value.cmp(&b.value);
            let tighter = if lower { ord.is_gt() } else { ord.is_lt() };
            if tighter {
                *b = Bound { value, strict };
            } else if ord.is_eq() {
                b.strict |= strict;
            }
        }
    }
}

/// Decides whether the system of half-planes has a common point.
pub fn is_feasible(constraints: &[HalfPlane]) -> bool {
    let (mut pos, mut neg, mut rows) = (Vec::new(), Vec::new(), Vec::new());
    for h in constraints {
        match h.a.signum() {
            1 => pos.push(h),
            -1 => neg.push(h),
            _ => rows.push((h.b.clone(), h.c.clone(), h.strict)),
        }
    }
    // Eliminate the first variable with positive multipliers (-a_q, a_p).
    for p in &pos {
        for q in &neg {
            let mp = -&q.a;
            let b = &mp * &p.b + &p.a * &q.b;
            let c = &mp * &p.c + &p.a * &q.c;
            rows.push((b, c, p.strict || q.strict));
        }
    }

    let (mut lo, mut hi): (Option<Bound>, Option<Bound>) = (None, None);
    for (b, c, strict) in rows {
        match b.signum() {
            0 => {
                let s = c.signum();
                if s < 0 || (s == 0 && strict) {
                    return false;
                }
            }
            1 => tighten(&mut hi, c / b, strict, false),
            _ => tighten(&mut lo, c / b, strict, true),
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => match l.value.cmp(&h.value) {
            core::cmp::Ordering::Less => true,
            core::cmp::Ordering::Equal => !(l.strict || h.strict),
            core::cmp::Ordering::Greater => false,
        },
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(a: i64, b: i64, c: i64, strict: bool) -> HalfPlane {
        HalfPlane::new(a.into(), b.into(), c.into(), strict)
    }

    #[test]
    fn unit_square() {
        let sq = [
            h(1, 0, 1, false),
            h(-1, 0, 0, false),
            h(0, 1, 1, false),
            h(0, -1, 0, false),
        ];
        assert!(is_feasible(&sq));
        // s + t ≥ 2 touches the corner only
        let mut touch = sq.to_vec();
        touch.push(h(-1, -1, -2, false));
        assert!(is_feasible(&touch));
        touch.last_mut().unwrap().strict = true;
        assert!(!is_feasible(&touch));
        let mut out = sq.to_vec();
        out.push(h(-1, -1, -3, false));
        assert!(!is_feasible(&out));
    }

    #[test]
    fn degenerate_rows() {
        assert!(is_feasible(&[h(0, 0, 0, false)]));
        assert!(!is_feasible(&[h(0, 0, 0, true)]));
        assert!(!is_feasible(&[h(0, 0, -1, false)]));
        assert!(is_feasible(&[]));
    }

    #[test]
    fn golden_line() {
        // s = τ and t ≤ s - τ with t ≥ 0 forces t = 0
        let tau = GoldenNumber::tau();
        let z = GoldenNumber::from(0);
        let one = GoldenNumber::from(1);
        let sys = [
            HalfPlane::new(one.clone(), z.clone(), tau.clone(), false),
            HalfPlane::new(-&one, z.clone(), -&tau, false),
            HalfPlane::new(-&one, one.clone(), -&tau, false),
            HalfPlane::new(z.clone(), -&one, z.clone(), false),
        ];
        assert!(is_feasible(&sys));
        let mut strict = sys.to_vec();
        strict[3].strict = true;
        assert!(!is_feasible(&strict));
    }
}
