//! Sparse Gaussian elimination for kernels of linear maps between finite
//! quotients `S / A`.

use std::collections::HashMap;

use crate::poly::{Coefficient, Field};

pub(crate) type SparseVec = Vec<(usize, Coefficient)>;

/// `a - c * b`, both sorted by index.
fn axpy(field: Field, a: &SparseVec, c: &Coefficient, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.neg(&field.mul(c, &b[j].1))));
            j += 1;
        } else {
            let v = field.sub(&a[i].1, &field.mul(c, &b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Basis of `{ c : sum_j c_j images[j] = 0 }`. Each image is a sparse
/// vector; the result vectors are sparse over the source index `j`.
pub(crate) fn kernel(field: Field, images: Vec<SparseVec>) -> Vec<SparseVec> {
    struct Pivot {
        image: SparseVec,
        combo: SparseVec,
    }
    let mut pivots: HashMap<usize, Pivot> = HashMap::new();
    let mut out = Vec::new();
    for (j, mut image) in images.into_iter().enumerate() {
        let mut combo: SparseVec = vec![(j, field.one())];
        loop {
            let Some((lead, c)) = image.first().cloned() else {
                out.push(combo);
                break;
            };
            match pivots.get(&lead) {
                Some(p) => {
                    image = axpy(field, &image, &c, &p.image);
                    combo = axpy(field, &combo, &c, &p.combo);
                }
                None => {
                    let inv = field.inv(&c).expect("nonzero pivot");
                    for (_, v) in image.iter_mut() {
                        *v = field.mul(v, &inv);
                    }
                    for (_, v) in combo.iter_mut() {
                        *v = field.mul(v, &inv);
                    }
                    pivots.insert(lead, Pivot { image, combo });
                    break;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_small_map() {
        let f = Field::Prime(7);
        let c = |v: i64| f.from_i64(v);
        // columns: e0 -> (1, 1), e1 -> (2, 2), e2 -> (0, 1)
        let images = vec![vec![(0, c(1)), (1, c(1))], vec![(0, c(2)), (1, c(2))], vec![(1, c(1))]];
        let k = kernel(f, images);
        assert_eq!(k.len(), 1);
        // -2 e0 + e1
        assert_eq!(k[0], vec![(0, c(-2)), (1, c(1))]);
    }

    #[test]
    fn zero_images_give_full_kernel() {
        let f = Field::Rational;
        let k = kernel(f, vec![vec![], vec![]]);
        assert_eq!(k.len(), 2);
    }
}
