//! Exact sparse elimination over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{LinComb, Scalar};

/// Basis of the kernel of the linear map `k ↦ image(k)`, each vector expressed
/// in the source keys. Vectors are triangular in the input order.
pub fn kernel<K, I>(images: &[(K, LinComb<I>)]) -> Vec<LinComb<K>>
where
    K: Ord + Clone,
    I: Ord + Clone,
{
    let mut pivots: BTreeMap<I, (LinComb<I>, LinComb<K>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (k, v) in images {
        let mut img = v.clone();
        let mut src = LinComb::basis(k.clone());
        loop {
            let Some((lead, c)) = img.iter().next().map(|(i, c)| (i.clone(), c.clone())) else {
                out.push(src);
                break;
            };
            match pivots.get(&lead) {
                Some((pi, ps)) => {
                    let neg = -c;
                    img.add_scaled(pi, &neg);
                    src.add_scaled(ps, &neg);
                }
                None => {
                    let inv = Scalar::one() / c;
                    pivots.insert(lead, (img.scale(&inv), src.scale(&inv)));
                    break;
                }
            }
        }
    }
    out
}

/// Rank of a family of vectors.
pub fn rank<I: Ord + Clone>(vectors: &[LinComb<I>]) -> usize {
    let indexed: Vec<(usize, LinComb<I>)> = vectors.iter().cloned().enumerate().collect();
    vectors.len() - kernel(&indexed).len()
}

/// True when every vector is zero after restricting away from `allowed`.
pub fn supported_on<K: Ord + Clone, F: Fn(&K) -> bool>(v: &LinComb<K>, allowed: F) -> bool {
    v.iter().all(|(k, c)| c.is_zero() || allowed(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn small_kernel() {
        let mut a = LinComb::basis(0u8);
        a.add_term(1, int(1));
        let b = LinComb::term(0u8, int(2));
        let mut c = LinComb::basis(1u8);
        c.add_term(0, int(-1));
        let images = vec![('a', a), ('b', b), ('c', c)];
        let ker = kernel(&images);
        assert_eq!(ker.len(), 1);
        let mut expected = LinComb::basis('c');
        expected.add_term('a', int(-1));
        expected.add_term('b', int(1));
        assert_eq!(ker[0], expected);
        assert_eq!(rank(&images.iter().map(|p| p.1.clone()).collect::<Vec<_>>()), 2);
    }

    #[test]
    fn zero_map() {
        let images = vec![(1, LinComb::<u8>::zero()), (2, LinComb::zero())];
        assert_eq!(kernel(&images).len(), 2);
    }
}
