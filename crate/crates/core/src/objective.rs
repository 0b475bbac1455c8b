//! Objective values with a distinguished worst element.
//!
//! Closed-loop instability is encoded as `Worst`, which ranks above every
//! finite value. Direct search only needs this ordering, so the constraint
//! "stable closed loop" becomes a penalty wall without any arithmetic on
//! infinities.

use std::cmp::Ordering;
use std::fmt;

/// A real objective value or the distinguished `Worst` marker.
///
/// The ordering is total: finite values compare as reals and every finite
/// value ranks below `Worst`. Use [`ObjectiveValue::finite`] to construct
/// values from floats; it maps non-finite floats to `Worst` so the ordering
/// invariant cannot be broken by overflow.
#[derive(Debug, Clone, Copy)]
pub enum ObjectiveValue {
    Finite(f64),
    Worst,
}

impl ObjectiveValue {
    /// Wrap a float, demoting NaN and infinities to `Worst`.
    pub fn finite(v: f64) -> Self {
        if v.is_finite() {
            ObjectiveValue::Finite(v)
        } else {
            ObjectiveValue::Worst
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            ObjectiveValue::Finite(v) => Some(*v),
            ObjectiveValue::Worst => None,
        }
    }

    pub fn is_worst(&self) -> bool {
        matches!(self, ObjectiveValue::Worst)
    }
}

impl PartialEq for ObjectiveValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ObjectiveValue {}

impl PartialOrd for ObjectiveValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ObjectiveValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ObjectiveValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.total_cmp(b),
            (Finite(_), Worst) => Ordering::Less,
            (Worst, Finite(_)) => Ordering::Greater,
            (Worst, Worst) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ObjectiveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectiveValue::Finite(v) => write!(f, "{v}"),
            ObjectiveValue::Worst => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_values_order_as_reals() {
        let a = ObjectiveValue::finite(-1.0);
        let b = ObjectiveValue::finite(2.5);
        assert!(a < b);
        assert!(b > a);
        assert_eq!(a, ObjectiveValue::finite(-1.0));
    }

    #[test]
    fn worst_ranks_above_every_finite_value() {
        let w = ObjectiveValue::Worst;
        assert!(ObjectiveValue::finite(1e300) < w);
        assert!(ObjectiveValue::finite(f64::MIN) < w);
        assert_eq!(w, ObjectiveValue::Worst);
    }

    #[test]
    fn non_finite_floats_become_worst() {
        assert!(ObjectiveValue::finite(f64::NAN).is_worst());
        assert!(ObjectiveValue::finite(f64::INFINITY).is_worst());
        assert!(ObjectiveValue::finite(f64::NEG_INFINITY).is_worst());
    }

    #[test]
    fn worst_displays_as_inf_token() {
        assert_eq!(ObjectiveValue::Worst.to_string(), "inf");
        assert_eq!(ObjectiveValue::finite(0.5).to_string(), "0.5");
    }
}
