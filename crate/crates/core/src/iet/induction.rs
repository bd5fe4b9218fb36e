//! First-return (induced) maps of a rotation on a sub-interval.

use serde::Serialize;

use crate::arith::QuadraticNumber;

use super::{IetError, Rotation, ThreeIet};

/// Default bound on return times.
pub const DEFAULT_RETURN_CAP: usize = 1_000_000;

/// A maximal sub-interval `[lo, hi)` of the inducing interval on which the
/// return time and the return translation are constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedPiece {
    pub lo: QuadraticNumber,
    pub hi: QuadraticNumber,
    pub return_time: usize,
    pub translation: QuadraticNumber,
}

/// The induced map as an interval exchange, pieces sorted left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedMap {
    pub pieces: Vec<InducedPiece>,
}

impl InducedMap {
    pub fn piece_of(&self, x: &QuadraticNumber) -> Option<&InducedPiece> {
        self.pieces.iter().find(|p| &p.lo <= x && x < &p.hi)
    }

    pub fn apply(&self, x: &QuadraticNumber) -> Option<QuadraticNumber> {
        self.piece_of(x).map(|p| x + &p.translation)
    }

    pub fn return_time(&self, x: &QuadraticNumber) -> Option<usize> {
        self.piece_of(x).map(|p| p.return_time)
    }

    /// Same partition endpoints and translations as `t` (left-closed).
    pub fn same_exchange_as(&self, t: &ThreeIet) -> bool {
        self.pieces.len() == 3
            && self.pieces.iter().zip(0u8..).all(|(piece, letter)| {
                let (lo, hi) = t.interval(letter);
                &piece.lo == lo && &piece.hi == hi && &piece.translation == t.translation(letter)
            })
    }
}

struct Pending {
    lo: QuadraticNumber,
    hi: QuadraticNumber,
    offset: QuadraticNumber,
}

/// Induces `rotation` on `[lo, hi)`, splitting pieces at the rotation's
/// discontinuity and at the inducing interval's endpoints until every piece
/// has returned.
pub fn first_return(
    rotation: &Rotation,
    lo: &QuadraticNumber,
    hi: &QuadraticNumber,
    cap: usize,
) -> Result<InducedMap, IetError> {
    QuadraticNumber::field_of([lo, hi, rotation.split()])?;
    let (start, end) = rotation.domain();
    if !(start <= lo && lo < hi && hi <= end) {
        return Err(IetError::InvalidInterval);
    }
    let mut returned: Vec<InducedPiece> = Vec::new();
    let mut pending = vec![Pending {
        lo: lo.clone(),
        hi: hi.clone(),
        offset: QuadraticNumber::zero(),
    }];
    for time in 1..=cap {
        if pending.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for piece in pending {
            // Current image is [piece.lo + offset, piece.hi + offset).
            let image_lo = &piece.lo + &piece.offset;
            let image_hi = &piece.hi + &piece.offset;
            let split = rotation.split();
            let mut parts = Vec::with_capacity(2);
            if &image_lo < split && split < &image_hi {
                let cut = split - &piece.offset;
                parts.push((piece.lo.clone(), cut.clone()));
                parts.push((cut, piece.hi.clone()));
            } else {
                parts.push((piece.lo.clone(), piece.hi.clone()));
            }
            for (plo, phi) in parts {
                let image = &plo + &piece.offset;
                let part = rotation
                    .locate(&image)
                    .expect("images stay in the rotation domain");
                let offset = &piece.offset + rotation.shift(part);
                route(plo, phi, offset, lo, hi, time, &mut returned, &mut next);
            }
        }
        pending = next;
    }
    if !pending.is_empty() {
        return Err(IetError::ReturnTimeCapExceeded { cap });
    }
    returned.sort_by(|a, b| a.lo.partial_cmp(&b.lo).expect("one field"));
    Ok(InducedMap {
        pieces: merge(returned),
    })
}

// Splits the image of [plo, phi) by the inducing interval [lo, hi).
#[allow(clippy::too_many_arguments)]
fn route(
    plo: QuadraticNumber,
    phi: QuadraticNumber,
    offset: QuadraticNumber,
    lo: &QuadraticNumber,
    hi: &QuadraticNumber,
    time: usize,
    returned: &mut Vec<InducedPiece>,
    pending: &mut Vec<Pending>,
) {
    let image_lo = &plo + &offset;
    let image_hi = &phi + &offset;
    let mut cuts = vec![plo.clone()];
    for bound in [lo, hi] {
        if &image_lo < bound && bound < &image_hi {
            cuts.push(bound - &offset);
        }
    }
    cuts.push(phi);
    for w in cuts.windows(2) {
        let image = &w[0] + &offset;
        if lo <= &image && &image < hi {
            returned.push(InducedPiece {
                lo: w[0].clone(),
                hi: w[1].clone(),
                return_time: time,
                translation: offset.clone(),
            });
        } else {
            pending.push(Pending {
                lo: w[0].clone(),
                hi: w[1].clone(),
                offset: offset.clone(),
            });
        }
    }
}

fn merge(pieces: Vec<InducedPiece>) -> Vec<InducedPiece> {
    let mut merged: Vec<InducedPiece> = Vec::with_capacity(pieces.len());
    for piece in pieces {
        match merged.last_mut() {
            Some(last)
                if last.hi == piece.lo
                    && last.return_time == piece.return_time
                    && last.translation == piece.translation =>
            {
                last.hi = piece.hi;
            }
            _ => merged.push(piece),
        }
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iet::IetParameters;

    fn golden() -> IetParameters {
        IetParameters::parse("(-1+sqrt(5))/2", "(1+sqrt(5))/4", "0").unwrap()
    }

    #[test]
    fn inducing_on_domain_gives_rotation() {
        let p = golden();
        let r = Rotation::r(&p);
        let (lo, hi) = r.domain();
        let induced = first_return(&r, lo, hi, 10).unwrap();
        assert_eq!(induced.pieces.len(), 2);
        assert!(induced.pieces.iter().all(|piece| piece.return_time == 1));
        assert_eq!(induced.pieces[0].hi, *r.split());
        assert_eq!(&induced.pieces[0].translation, r.shift(0));
        assert_eq!(&induced.pieces[1].translation, r.shift(1));
    }

    #[test]
    fn return_times_on_induction_interval() {
        let p = golden();
        let t = ThreeIet::new(p.clone());
        let r = Rotation::r(&p);
        let (lo, hi) = t.domain();
        let induced = first_return(&r, lo, hi, DEFAULT_RETURN_CAP).unwrap();
        let times: Vec<_> = induced
            .pieces
            .iter()
            .map(|piece| piece.return_time)
            .collect();
        assert_eq!(times, vec![1, 2, 1]);
        assert!(induced.same_exchange_as(&t));
    }

    #[test]
    fn cap_is_enforced() {
        let p = golden();
        let r = Rotation::r(&p);
        let lo = QuadraticNumber::zero();
        let hi = QuadraticNumber::from_ratio(1, 1000);
        assert_eq!(
            first_return(&r, &lo, &hi, 3),
            Err(IetError::ReturnTimeCapExceeded { cap: 3 })
        );
        assert!(first_return(&r, &lo, &hi, DEFAULT_RETURN_CAP).is_ok());
    }

    #[test]
    fn rejects_interval_outside_domain() {
        let r = Rotation::r(&golden());
        let lo = QuadraticNumber::from_ratio(-1, 2);
        let hi = QuadraticNumber::from_ratio(1, 2);
        assert_eq!(
            first_return(&r, &lo, &hi, 5),
            Err(IetError::InvalidInterval)
        );
    }
}
