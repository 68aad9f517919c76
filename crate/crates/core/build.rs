fn main() {
    // System OpenBLAS carries the full LAPACK symbol set (dsyevr_, dsyev_, ...).
    println!("cargo:rustc-link-lib=dylib=openblas");
}
