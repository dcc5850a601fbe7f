//! Compiles a small C program against the generated header, links it to the
//! cdylib and runs it: the whole C ABI round trip.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <math.h>
#include <stdio.h>
#include "slopegen.h"

int main(void) {
    double a[4] = {1, 2, 3, 4}, b[4] = {5, 6, 7, 8}, prod[4];
    if (slope_quat_multiply(a, b, prod) != SLOPE_STATUS_OK) return 1;
    if (prod[0] != 46.0 || prod[1] != 20.0 || prod[2] != 30.0 || prod[3] != 24.0) return 2;

    double q = 0.0;
    if (slope_quat_quadratic_form(a, &q) != SLOPE_STATUS_OK || q != -20.0) return 3;

    SlopeCurve *curve = NULL;
    if (slope_curve_new("s12-circle", NULL, NULL, 0, &curve) != SLOPE_STATUS_OK) return 4;

    SlopeSpec *spec = NULL;
    if (slope_spec_new(SLOPE_CASE_ID_SPACELIKE_CONE_HYPERBOLIC, 1.1, curve,
                       0.5, 3.0, -2.0, 2.0, 8, 8, &spec) != SLOPE_STATUS_OK) return 5;

    double d[3], p[3], h[3];
    if (slope_spec_direct(spec, 1.7, 0.4, d) != SLOPE_STATUS_OK) return 6;
    if (slope_spec_product(spec, 1.7, 0.4, p) != SLOPE_STATUS_OK) return 7;
    if (slope_spec_homothetic(spec, 1.7, 0.4, h) != SLOPE_STATUS_OK) return 8;
    for (int i = 0; i < 3; i++) {
        if (fabs(d[i] - p[i]) > 1e-10 || fabs(d[i] - h[i]) > 1e-10) return 9;
    }

    SlopeVerification report;
    if (slope_spec_verify(spec, &report) != SLOPE_STATUS_OK) return 10;
    if (report.pass != 1) return 11;
    if (fabs(report.slope_cosine_mean - cosh(1.1)) > 1e-7) return 12;

    slope_spec_free(spec);
    slope_curve_free(curve);
    printf("c smoke ok\n");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = crate_dir.join("include");
    assert!(
        include_dir.join("slopegen.h").exists(),
        "cbindgen header missing; the build script should have written it"
    );

    // target/debug, inferred from this test binary's own location
    let mut lib_dir = std::env::current_exe().expect("test binary path");
    lib_dir.pop(); // strip the binary name
    if lib_dir.ends_with("deps") {
        lib_dir.pop();
    }
    let cdylib = lib_dir.join("libslopegen_ffi.so");
    assert!(cdylib.exists(), "cdylib not found at {}", cdylib.display());

    let work = tempfile::tempdir().expect("tempdir");
    let c_path = work.path().join("smoke.c");
    let bin_path = work.path().join("smoke");
    std::fs::write(&c_path, C_PROGRAM).expect("write C source");

    let compile = Command::new("cc")
        .arg(&c_path)
        .arg("-I")
        .arg(&include_dir)
        .arg("-L")
        .arg(&lib_dir)
        .arg("-lslopegen_ffi")
        .arg("-lm")
        .arg("-o")
        .arg(&bin_path)
        .output()
        .expect("invoke cc");
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&bin_path)
        .env("LD_LIBRARY_PATH", &lib_dir)
        .output()
        .expect("run smoke binary");
    assert!(
        run.status.success(),
        "smoke binary exited with {:?}:\n{}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "c smoke ok\n");
}
