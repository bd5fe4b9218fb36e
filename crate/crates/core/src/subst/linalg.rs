use crate::arith::QuadraticNumber;

/// A non-zero kernel vector of `a` when the kernel has dimension exactly 1.
pub fn kernel_vector(a: &[Vec<QuadraticNumber>]) -> Option<Vec<QuadraticNumber>> {
    let rows = a.len();
    let cols = a.first()?.len();
    let mut m: Vec<Vec<QuadraticNumber>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().ok()?;
        m[r] = m[r]
            .iter()
            .map(|x| x.checked_mul(&inv))
            .collect::<Result<_, _>>()
            .ok()?;
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (entry, p) in m[i].iter_mut().zip(&pivot_row) {
                    let delta = factor.checked_mul(p).ok()?;
                    *entry = entry.checked_sub(&delta).ok()?;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let [free] = free[..] else { return None };
    let mut v = vec![QuadraticNumber::zero(); cols];
    v[free] = QuadraticNumber::one();
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = -m[row][free].clone();
    }
    Some(v)
}
