//! Thin wrappers over the system LAPACK/BLAS (OpenBLAS).
//!
//! Symmetric matrices are stored full and symmetric, so the row-major buffers
//! used elsewhere in the crate can be handed to column-major LAPACK directly.
//! For a general row-major matrix the column-major view is its transpose; the
//! `gemv` wrapper accounts for that.

use crate::error::{Error, Result};
use std::os::raw::c_char;
use std::sync::Once;

extern "C" {
    fn dsyevr_(
        jobz: *const c_char,
        range: *const c_char,
        uplo: *const c_char,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        vl: *const f64,
        vu: *const f64,
        il: *const i32,
        iu: *const i32,
        abstol: *const f64,
        m: *mut i32,
        w: *mut f64,
        z: *mut f64,
        ldz: *const i32,
        isuppz: *mut i32,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );

    fn dsyev_(
        jobz: *const c_char,
        uplo: *const c_char,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        info: *mut i32,
    );

    fn dsyrk_(
        uplo: *const c_char,
        trans: *const c_char,
        n: *const i32,
        k: *const i32,
        alpha: *const f64,
        a: *const f64,
        lda: *const i32,
        beta: *const f64,
        c: *mut f64,
        ldc: *const i32,
    );

    fn dgemv_(
        trans: *const c_char,
        m: *const i32,
        n: *const i32,
        alpha: *const f64,
        a: *const f64,
        lda: *const i32,
        x: *const f64,
        incx: *const i32,
        beta: *const f64,
        y: *mut f64,
        incy: *const i32,
    );

    fn openblas_set_num_threads(n: i32);
}

static BLAS_INIT: Once = Once::new();

/// Pin BLAS to one thread: parallelism lives at the realization level and
/// single-threaded kernels keep results independent of the host's core count.
fn init_blas() {
    BLAS_INIT.call_once(|| unsafe { openblas_set_num_threads(1) });
}

const JOB_V: c_char = b'V' as c_char;
const JOB_N: c_char = b'N' as c_char;
const UPLO_U: c_char = b'U' as c_char;
const RANGE_A: c_char = b'A' as c_char;
const RANGE_I: c_char = b'I' as c_char;
const TRANS_T: c_char = b'T' as c_char;
const TRANS_N: c_char = b'N' as c_char;

/// Eigenvalue range selector for [`syevr`].
#[derive(Debug, Clone, Copy)]
pub(crate) enum EigRange {
    All,
    /// Inclusive 0-based index window into the ascending spectrum.
    Index { lo: usize, hi: usize },
}

/// Symmetric eigendecomposition (dsyevr). `a` is the full symmetric matrix,
/// length n*n; it is consumed as scratch. Returns ascending eigenvalues and,
/// if requested, the matching eigenvectors stored contiguously one after
/// another (column-major Z).
pub(crate) fn syevr(
    mut a: Vec<f64>,
    n: usize,
    range: EigRange,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    init_blas();
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Err(Error::invalid("matrix order must be positive"));
    }
    let ni = n as i32;
    let (range_c, il, iu) = match range {
        EigRange::All => (RANGE_A, 1i32, ni),
        EigRange::Index { lo, hi } => {
            assert!(lo <= hi && hi < n);
            (RANGE_I, lo as i32 + 1, hi as i32 + 1)
        }
    };
    let jobz = if want_vectors { JOB_V } else { JOB_N };
    let m_expect = (iu - il + 1) as usize;
    let mut m_found: i32 = 0;
    let mut w = vec![0.0f64; n];
    let mut z = if want_vectors {
        vec![0.0f64; n * m_expect]
    } else {
        vec![0.0f64; 1]
    };
    let ldz = if want_vectors { ni } else { 1 };
    let mut isuppz = vec![0i32; 2 * n.max(1)];
    let abstol = 0.0f64;
    let (vl, vu) = (0.0f64, 0.0f64);
    let mut info: i32 = 0;

    // workspace query
    let mut work_query = [0.0f64];
    let mut iwork_query = [0i32];
    let lwork_query: i32 = -1;
    unsafe {
        dsyevr_(
            &jobz,
            &range_c,
            &UPLO_U,
            &ni,
            a.as_mut_ptr(),
            &ni,
            &vl,
            &vu,
            &il,
            &iu,
            &abstol,
            &mut m_found,
            w.as_mut_ptr(),
            z.as_mut_ptr(),
            &ldz,
            isuppz.as_mut_ptr(),
            work_query.as_mut_ptr(),
            &lwork_query,
            iwork_query.as_mut_ptr(),
            &lwork_query,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Backend {
            routine: "dsyevr(query)",
            info,
        });
    }
    let lwork = work_query[0] as i32;
    let liwork = iwork_query[0];
    let mut work = vec![0.0f64; lwork as usize];
    let mut iwork = vec![0i32; liwork as usize];
    unsafe {
        dsyevr_(
            &jobz,
            &range_c,
            &UPLO_U,
            &ni,
            a.as_mut_ptr(),
            &ni,
            &vl,
            &vu,
            &il,
            &iu,
            &abstol,
            &mut m_found,
            w.as_mut_ptr(),
            z.as_mut_ptr(),
            &ldz,
            isuppz.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Backend {
            routine: "dsyevr",
            info,
        });
    }
    let m = m_found as usize;
    w.truncate(m);
    if want_vectors {
        z.truncate(n * m);
        Ok((w, Some(z)))
    } else {
        Ok((w, None))
    }
}

/// Simple full symmetric eigensolver (dsyev); cheaper than dsyevr for the
/// small matrices hit millions of times in the Wishart loops.
pub(crate) fn syev_small(a: &mut [f64], n: usize, want_vectors: bool) -> Result<Vec<f64>> {
    init_blas();
    assert_eq!(a.len(), n * n);
    let ni = n as i32;
    let jobz = if want_vectors { JOB_V } else { JOB_N };
    let mut w = vec![0.0f64; n];
    let lwork = (34 * n.max(1)) as i32;
    let mut work = vec![0.0f64; lwork as usize];
    let mut info: i32 = 0;
    unsafe {
        dsyev_(
            &jobz,
            &UPLO_U,
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Backend {
            routine: "dsyev",
            info,
        });
    }
    Ok(w)
}

/// c = g gᵀ for a row-major d1 x d2 matrix `g`; result is d1 x d1 full
/// symmetric storage.
pub(crate) fn gram(g: &[f64], d1: usize, d2: usize) -> Vec<f64> {
    init_blas();
    assert_eq!(g.len(), d1 * d2);
    let mut c = vec![0.0f64; d1 * d1];
    let n = d1 as i32;
    let k = d2 as i32;
    let (alpha, beta) = (1.0f64, 0.0f64);
    // Column-major view of row-major g is gᵀ (d2 x d1); TRANS='T' then yields
    // gᵀᵀ gᵀᵀᵀ = g gᵀ in the N x N output.
    unsafe {
        dsyrk_(
            &UPLO_U, &TRANS_T, &n, &k, &alpha, g.as_ptr(), &k, &beta, c.as_mut_ptr(), &n,
        );
    }
    // dsyrk fills the column-major upper triangle, i.e. the row-major lower
    // one; mirror it so the buffer is fully symmetric.
    for i in 0..d1 {
        for j in (i + 1)..d1 {
            c[i * d1 + j] = c[j * d1 + i];
        }
    }
    c
}

/// y = m x (`transpose = false`) or y = mᵀ x (`transpose = true`) for a
/// row-major `rows x cols` matrix.
pub(crate) fn gemv(m: &[f64], rows: usize, cols: usize, transpose: bool, x: &[f64], y: &mut [f64]) {
    init_blas();
    assert_eq!(m.len(), rows * cols);
    // Column-major view of the buffer is the cols x rows transpose, so the
    // BLAS trans flag is inverted relative to the caller's request.
    let (trans, xm, ym) = if transpose {
        (TRANS_N, rows, cols)
    } else {
        (TRANS_T, cols, rows)
    };
    assert_eq!(x.len(), xm);
    assert_eq!(y.len(), ym);
    let mi = cols as i32; // column-major row count
    let ni = rows as i32;
    let (alpha, beta) = (1.0f64, 0.0f64);
    let inc = 1i32;
    unsafe {
        dgemv_(
            &trans,
            &mi,
            &ni,
            &alpha,
            m.as_ptr(),
            &mi,
            x.as_ptr(),
            &inc,
            &beta,
            y.as_mut_ptr(),
            &inc,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syevr_diag() {
        let a = vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0];
        let (w, _) = syevr(a, 3, EigRange::All, false).unwrap();
        assert!((w[0] - 1.0).abs() < 1e-12);
        assert!((w[1] - 2.0).abs() < 1e-12);
        assert!((w[2] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn syevr_index_range() {
        let a = vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0];
        let (w, z) = syevr(a, 3, EigRange::Index { lo: 1, hi: 2 }, true).unwrap();
        assert_eq!(w.len(), 2);
        assert!((w[0] - 2.0).abs() < 1e-12);
        assert!((w[1] - 3.0).abs() < 1e-12);
        let z = z.unwrap();
        // eigenvector of 2.0 is e_2, eigenvector of 3.0 is e_0
        assert!((z[2].abs() - 1.0).abs() < 1e-12);
        assert!((z[3].abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gram_small() {
        // g = [[1,2],[3,4]] row-major; g g^T = [[5,11],[11,25]]
        let g = vec![1.0, 2.0, 3.0, 4.0];
        let c = gram(&g, 2, 2);
        assert!((c[0] - 5.0).abs() < 1e-12);
        assert!((c[1] - 11.0).abs() < 1e-12);
        assert!((c[2] - 11.0).abs() < 1e-12);
        assert!((c[3] - 25.0).abs() < 1e-12);
    }

    #[test]
    fn gemv_roundtrip() {
        // m = [[1,2,3],[4,5,6]] (2x3 row-major)
        let m = vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let x = vec![1.0, 1.0, 1.0];
        let mut y = vec![0.0; 2];
        gemv(&m, 2, 3, false, &x, &mut y);
        assert_eq!(y, vec![6.0, 15.0]);
        let x2 = vec![1.0, 1.0];
        let mut y2 = vec![0.0; 3];
        gemv(&m, 2, 3, true, &x2, &mut y2);
        assert_eq!(y2, vec![5.0, 7.0, 9.0]);
    }
}
