//! Standard fans and fan constructions.

use super::Fan;
use crate::linalg;

impl Fan {
    /// The point (0-dimensional fan).
    pub fn point() -> Fan {
        Fan::new(0, Vec::new(), vec![Vec::new()])
    }

    /// Fan of `P^n`: rays `e_1, ..., e_n, -(e_1 + ... + e_n)`, maximal cones
    /// all `n`-subsets of the rays.
    pub fn projective_space(n: usize) -> Fan {
        if n == 0 {
            return Fan::point();
        }
        let mut rays: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        rays.push(vec![-1; n]);
        let cones = (0..=n)
            .map(|skip| (0..=n).filter(|&i| i != skip).collect())
            .collect();
        Fan::new(n, rays, cones)
    }

    /// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
    pub fn hirzebruch(a: i64) -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
    }

    /// Product fan in `Z^(n1 + n2)`.
    pub fn product(&self, other: &Fan) -> Fan {
        let (n1, n2) = (self.dim, other.dim);
        let mut rays: Vec<Vec<i64>> = self
            .rays
            .iter()
            .map(|r| r.iter().copied().chain(std::iter::repeat_n(0, n2)).collect())
            .collect();
        rays.extend(
            other
                .rays
                .iter()
                .map(|r| std::iter::repeat_n(0, n1).chain(r.iter().copied()).collect()),
        );
        let shift = self.rays.len();
        let mut cones = Vec::new();
        for a in &self.maximal_cones {
            for b in &other.maximal_cones {
                let mut c = a.clone();
                c.extend(b.iter().map(|i| i + shift));
                cones.push(c);
            }
        }
        Fan::new(n1 + n2, rays, cones)
    }

    /// Star subdivision of maximal cone `cone` at the sum of its rays. For a
    /// smooth cone the result is smooth (the toric blow-up of a fixed point).
    /// A cone with a single ray is returned unchanged: blowing up a point of
    /// a curve does nothing.
    pub fn star_subdivide(&self, cone: usize) -> Fan {
        let target = &self.maximal_cones[cone];
        if target.len() < 2 {
            return self.clone();
        }
        let mut new_ray = vec![0i64; self.dim];
        for &i in target {
            for (x, y) in new_ray.iter_mut().zip(&self.rays[i]) {
                *x += y;
            }
        }
        let g = linalg::gcd_all(&new_ray).max(1);
        new_ray.iter_mut().for_each(|x| *x /= g);
        let idx = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(new_ray);
        let mut cones: Vec<Vec<usize>> = self
            .maximal_cones
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != cone)
            .map(|(_, c)| c.clone())
            .collect();
        for skip in 0..target.len() {
            let mut c: Vec<usize> = target
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &r)| r)
                .collect();
            c.push(idx);
            cones.push(c);
        }
        Fan::new(self.dim, rays, cones)
    }

    /// Repeated star subdivisions; each choice picks a cone modulo the current
    /// number of cones.
    pub fn refine(&self, choices: &[usize]) -> Fan {
        choices.iter().fold(self.clone(), |fan, &c| {
            let k = c % fan.maximal_cones.len();
            fan.star_subdivide(k)
        })
    }

    /// Image of the fan under the lattice automorphism `u` (applied to rays as
    /// column vectors).
    pub fn transform(&self, u: &[Vec<i64>]) -> Fan {
        Fan::new(
            self.dim,
            self.rays.iter().map(|r| linalg::mat_vec(u, r)).collect(),
            self.maximal_cones.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::toric_aut_report;

    #[test]
    fn projective_spaces_validate() {
        for n in 0..=4 {
            let fan = Fan::projective_space(n).validate().unwrap();
            let n = n as u64;
            assert_eq!(toric_aut_report(&fan).dim_aut, n * n + 2 * n);
        }
    }

    #[test]
    fn refinements_stay_smooth_and_complete() {
        let fan = Fan::projective_space(2).refine(&[0, 3, 1, 7, 2, 5]);
        assert!(fan.validate().is_ok());
        let fan = Fan::projective_space(3).refine(&[1, 4, 2]);
        assert!(fan.validate().is_ok());
        let p1 = Fan::projective_space(1);
        assert_eq!(p1.refine(&[0, 1]), p1);
    }

    #[test]
    fn products_validate() {
        let p1 = Fan::projective_space(1);
        let p2 = Fan::projective_space(2);
        assert!(p1.product(&p2).validate().is_ok());
        assert!(p1.product(&Fan::point()).validate().is_ok());
    }

    #[test]
    fn transform_by_unimodular_matrix() {
        let u = vec![vec![1, 1], vec![0, 1]];
        assert!(Fan::hirzebruch(2).transform(&u).validate().is_ok());
        let bad = vec![vec![2, 0], vec![0, 1]];
        assert!(Fan::hirzebruch(2).transform(&bad).validate().is_err());
    }
}
