//! Link determinant from a checkerboard colouring (Goeritz matrix).

use std::collections::VecDeque;

use super::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// `|det|` of the reduced Goeritz matrix of the diagram.
pub fn goeritz_determinant(d: &PlanarDiagram) -> Result<u64> {
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    let n = d.crossing_count();
    if n == 0 {
        return Ok(1);
    }
    // Darts are (crossing, slot); faces are orbits of "cross the edge, then
    // turn to the next slot counter-clockwise".
    let dart = |c: usize, k: u8| c * 4 + k as usize;
    let mut face_of = vec![usize::MAX; 4 * n];
    let mut faces = 0;
    for start in 0..4 * n {
        if face_of[start] != usize::MAX {
            continue;
        }
        let mut cur = start;
        while face_of[cur] == usize::MAX {
            face_of[cur] = faces;
            let (c, k) = (cur / 4, (cur % 4) as u8);
            let e = d.crossings()[c].ends[k as usize];
            let [a, b] = d.edge_ends(e);
            let (c2, k2) = if a == (c, k) { b } else { a };
            cur = dart(c2, (k2 + 1) % 4);
        }
        faces += 1;
    }
    // The corner between slots k and k+1 at crossing c lies in face_of[dart(c, k+1)].
    let corner = |c: usize, k: u8| face_of[dart(c, (k + 1) % 4)];

    let mut adjacent = vec![Vec::new(); faces];
    for c in 0..n {
        for k in 0..4u8 {
            let (f, g) = (corner(c, k), corner(c, (k + 3) % 4));
            adjacent[f].push(g);
            adjacent[g].push(f);
        }
    }
    let mut colour = vec![u8::MAX; faces];
    colour[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for &g in &adjacent[f] {
            if colour[g] == u8::MAX {
                colour[g] = 1 - colour[f];
                queue.push_back(g);
            }
        }
    }

    let shaded: Vec<usize> = (0..faces).filter(|&f| colour[f] == 0).collect();
    let index = |f: usize| shaded.iter().position(|&s| s == f);
    let m = shaded.len();
    let mut g = vec![vec![0i128; m]; m];
    for c in 0..n {
        let (sign, f1, f2) = if colour[corner(c, 0)] == 0 {
            (1, corner(c, 0), corner(c, 2))
        } else {
            (-1, corner(c, 1), corner(c, 3))
        };
        if f1 == f2 {
            continue;
        }
        let (i, j) = (index(f1).expect("shaded"), index(f2).expect("shaded"));
        g[i][j] -= sign;
        g[j][i] -= sign;
        g[i][i] += sign;
        g[j][j] += sign;
    }
    let reduced: Vec<Vec<i128>> = g.into_iter().skip(1).map(|row| row.into_iter().skip(1).collect()).collect();
    Ok(bareiss_determinant(reduced).unsigned_abs() as u64)
}

/// Fraction-free Gaussian elimination; exact over the integers.
fn bareiss_determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::diagram::{fourplat_diagram, TangleDiagram};

    #[test]
    fn small_determinants() {
        assert_eq!(goeritz_determinant(&fourplat_diagram(3, 1)).unwrap(), 3);
        assert_eq!(goeritz_determinant(&fourplat_diagram(5, 2)).unwrap(), 5);
        assert_eq!(goeritz_determinant(&TangleDiagram::infinity().numerator()).unwrap(), 1);
        assert_eq!(
            goeritz_determinant(&TangleDiagram::zero().numerator()),
            Err(Error::DisconnectedDiagram)
        );
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        fn cofactor(m: &[Vec<i128>]) -> i128 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i128>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let m = vec![vec![0, 2, -1, 3], vec![4, 1, 0, -2], vec![1, -3, 2, 2], vec![2, 0, 5, 1]];
        assert_eq!(bareiss_determinant(m.clone()), cofactor(&m));
        let singular = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(bareiss_determinant(singular), 0);
    }
}
