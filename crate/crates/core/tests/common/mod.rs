//! Test oracles shared by integration targets.

/// Solves the square system `M y = h` by Gaussian elimination with partial pivoting.
pub fn solve_square(mut mat: Vec<Vec<f64>>, mut h: Vec<f64>) -> Option<Vec<f64>> {
    let n = h.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| mat[a][col].abs().total_cmp(&mat[b][col].abs()))?;
        if mat[piv][col].abs() < 1e-12 {
            return None;
        }
        mat.swap(col, piv);
        h.swap(col, piv);
        for row in 0..n {
            if row != col {
                let f = mat[row][col] / mat[col][col];
                for k in col..n {
                    mat[row][k] -= f * mat[col][k];
                }
                h[row] -= f * h[col];
            }
        }
    }
    Some((0..n).map(|i| h[i] / mat[i][i]).collect())
}

/// Maximum of `r.y` over the vertices of `{A y <= b, 0 <= y <= d}`.
pub fn vertex_oracle(r: &[f64], a: &[Vec<f64>], b: &[f64], d: &[f64]) -> f64 {
    let n = r.len();
    let mut g: Vec<Vec<f64>> = a.to_vec();
    let mut h: Vec<f64> = b.to_vec();
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        g.push(e.clone());
        h.push(d[j].max(0.0));
        e[j] = -1.0;
        g.push(e);
        h.push(0.0);
    }
    let k = g.len();
    let mut best = f64::NEG_INFINITY;
    // Every n-subset of the constraints, as an index mask.
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let rows: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let mat = rows.iter().map(|&i| g[i].clone()).collect();
        let rhs = rows.iter().map(|&i| h[i]).collect();
        if let Some(y) = solve_square(mat, rhs) {
            let feasible = g
                .iter()
                .zip(&h)
                .all(|(row, &hi)| row.iter().zip(&y).map(|(x, v)| x * v).sum::<f64>() <= hi + 1e-9);
            if feasible {
                best = best.max(r.iter().zip(&y).map(|(x, v)| x * v).sum());
            }
        }
    }
    best
}
