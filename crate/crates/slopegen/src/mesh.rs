//! Surface meshing and export.
//!
//! A [`MeshGrid`] samples a surface on a regular `nu x nv` grid (u-major
//! vertex order) and quadrilateral faces between neighbouring samples.
//! Writers emit OBJ (ASCII `v`/`f` records, 1-based indices), CSV (header
//! `u,v,t,a,b`) and JSON (the `MeshGrid` structure itself). All output is
//! deterministic: floats are printed with a fixed 17-significant-digit rule,
//! so two runs produce identical bytes and every value round-trips exactly.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::minkowski::MinkowskiVec3;
use crate::surfaces::SurfaceSpec;

/// Which of the three equivalent parametrizations to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceForm {
    Direct,
    Product,
    Homothetic,
}

impl FromStr for SurfaceForm {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "direct" => Ok(SurfaceForm::Direct),
            "product" => Ok(SurfaceForm::Product),
            "homothetic" => Ok(SurfaceForm::Homothetic),
            other => Err(format!(
                "unknown form `{other}` (expected direct, product or homothetic)"
            )),
        }
    }
}

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Csv,
    Json,
}

impl FromStr for MeshFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "obj" => Ok(MeshFormat::Obj),
            "csv" => Ok(MeshFormat::Csv),
            "json" => Ok(MeshFormat::Json),
            other => Err(format!("unknown format `{other}` (expected obj, csv or json)")),
        }
    }
}

/// Regular quad mesh over a surface grid.
///
/// Vertex `(i, j)` sits at `u_i = u_min + i du`, `v_j = v_min + j dv` and is
/// stored at index `i * nv + j`; faces reference vertices 0-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshGrid {
    pub nu: usize,
    pub nv: usize,
    pub vertices: Vec<MinkowskiVec3>,
    pub faces: Vec<[u32; 4]>,
}

/// Sample `spec` with the chosen form into a mesh.
pub fn build_mesh(spec: &SurfaceSpec, form: SurfaceForm) -> Result<MeshGrid> {
    let (nu, nv) = spec.grid();
    let us = spec.u_samples();
    let vs = spec.v_samples();
    let mut vertices = Vec::with_capacity(nu * nv);
    for &u in &us {
        for &v in &vs {
            let p = match form {
                SurfaceForm::Direct => spec.direct(u, v)?,
                SurfaceForm::Product => spec.product_form(u, v)?,
                SurfaceForm::Homothetic => spec.homothetic_form(u, v)?,
            };
            vertices.push(p);
        }
    }
    let mut faces = Vec::with_capacity((nu - 1) * (nv - 1));
    for i in 0..nu - 1 {
        for j in 0..nv - 1 {
            let base = (i * nv + j) as u32;
            faces.push([base, base + nv as u32, base + nv as u32 + 1, base + 1]);
        }
    }
    Ok(MeshGrid { nu, nv, vertices, faces })
}

/// Build and write a mesh in one step, returning the mesh.
pub fn generate(
    spec: &SurfaceSpec,
    form: SurfaceForm,
    format: MeshFormat,
    out: &Path,
) -> Result<MeshGrid> {
    let mesh = build_mesh(spec, form)?;
    let file = File::create(out)?;
    let mut w = BufWriter::new(file);
    match format {
        MeshFormat::Obj => write_obj(&mesh, &mut w)?,
        MeshFormat::Csv => write_csv(spec, &mesh, &mut w)?,
        MeshFormat::Json => write_json(&mesh, &mut w)?,
    }
    w.flush()?;
    Ok(mesh)
}

/// ASCII OBJ: one `v t a b` line per vertex, quad `f` records, 1-based.
pub fn write_obj(mesh: &MeshGrid, w: &mut impl Write) -> Result<()> {
    for p in &mesh.vertices {
        writeln!(w, "v {} {} {}", g17(p.t), g17(p.a), g17(p.b))?;
    }
    for f in &mesh.faces {
        writeln!(w, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1)?;
    }
    Ok(())
}

/// CSV with header `u,v,t,a,b`, one row per vertex in storage order.
pub fn write_csv(spec: &SurfaceSpec, mesh: &MeshGrid, w: &mut impl Write) -> Result<()> {
    writeln!(w, "u,v,t,a,b")?;
    let us = spec.u_samples();
    let vs = spec.v_samples();
    for (idx, p) in mesh.vertices.iter().enumerate() {
        let (i, j) = (idx / mesh.nv, idx % mesh.nv);
        writeln!(
            w,
            "{},{},{},{},{}",
            g17(us[i]),
            g17(vs[j]),
            g17(p.t),
            g17(p.a),
            g17(p.b)
        )?;
    }
    Ok(())
}

/// JSON form of the whole `MeshGrid`; parses back bit-exactly.
pub fn write_json(mesh: &MeshGrid, w: &mut impl Write) -> Result<()> {
    serde_json::to_writer(&mut *w, mesh)?;
    writeln!(w)?;
    Ok(())
}

/// `%.17g`-style formatting: 17 significant digits, fixed or scientific
/// notation by exponent, trailing zeros stripped. 17 digits are enough for
/// an exact f64 round-trip.
pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".to_string() } else { "0".to_string() };
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".to_string() } else { "-inf".to_string() };
    }

    // normalized scientific form with 17 significant digits
    let sci = format!("{:.16e}", x);
    let epos = sci.find('e').expect("scientific format always has an exponent");
    let exp: i32 = sci[epos + 1..].parse().expect("exponent is an integer");

    if !(-4..17).contains(&exp) {
        // scientific: strip the mantissa, C-style e+dd exponent
        let mantissa = strip_trailing_zeros(&sci[..epos]);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        // fixed with exactly 17 significant digits, then strip
        let decimals = (16 - exp).max(0) as usize;
        let fixed = format!("{:.*}", decimals, x);
        strip_trailing_zeros(&fixed).to_string()
    }
}

fn strip_trailing_zeros(s: &str) -> &str {
    if !s.contains('.') {
        return s;
    }
    let s = s.trim_end_matches('0');
    s.strip_suffix('.').unwrap_or(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::ProfileCurve;
    use crate::surfaces::SlopeCase;
    use std::collections::BTreeMap;

    fn small_spec(nu: usize, nv: usize) -> SurfaceSpec {
        SurfaceSpec::new(
            SlopeCase::SpacelikeConeSpherical,
            std::f64::consts::FRAC_PI_4,
            ProfileCurve::builtin("s12-timelike-hyperbola", &BTreeMap::new()).unwrap(),
            (1.0, std::f64::consts::E),
            (0.0, 1.0),
            nu,
            nv,
        )
        .unwrap()
    }

    #[test]
    fn two_by_two_grid_has_one_face() {
        let mesh = build_mesh(&small_spec(2, 2), SurfaceForm::Direct).unwrap();
        assert_eq!(mesh.vertices.len(), 4);
        assert_eq!(mesh.faces.len(), 1);
        // vertex (0,0) is the u = 1, v = 0 corner: (0, 0, sqrt(2)/2)
        let p = mesh.vertices[0];
        let expected = MinkowskiVec3::new(0.0, 0.0, std::f64::consts::FRAC_1_SQRT_2);
        assert!((p - expected).euclid_norm() < 1e-15);
        // all face indices in range
        for f in &mesh.faces {
            assert!(f.iter().all(|&i| (i as usize) < mesh.vertices.len()));
        }
    }

    #[test]
    fn obj_layout() {
        let mesh = build_mesh(&small_spec(2, 2), SurfaceForm::Direct).unwrap();
        let mut buf = Vec::new();
        write_obj(&mesh, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[..4].iter().all(|l| l.starts_with("v ")));
        assert_eq!(lines[4], "f 1 3 4 2");
    }

    #[test]
    fn csv_header_and_rows() {
        let spec = small_spec(2, 3);
        let mesh = build_mesh(&spec, SurfaceForm::Direct).unwrap();
        let mut buf = Vec::new();
        write_csv(&spec, &mesh, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "u,v,t,a,b");
        assert_eq!(lines.len(), 1 + 6);
        // first data row carries u = 1, v = 0
        assert!(lines[1].starts_with("1,0,"));
    }

    #[test]
    fn json_round_trips_exactly() {
        let mesh = build_mesh(&small_spec(3, 4), SurfaceForm::Homothetic).unwrap();
        let mut buf = Vec::new();
        write_json(&mesh, &mut buf).unwrap();
        let back: MeshGrid = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, mesh);
    }

    #[test]
    fn forms_agree_within_tolerance_not_bitwise() {
        let spec = small_spec(4, 4);
        let a = build_mesh(&spec, SurfaceForm::Direct).unwrap();
        let b = build_mesh(&spec, SurfaceForm::Product).unwrap();
        for (pa, pb) in a.vertices.iter().zip(&b.vertices) {
            assert!((*pa - *pb).euclid_norm() <= 1e-12 * (1.0 + pa.euclid_norm()));
        }
    }

    #[test]
    fn g17_formatting() {
        assert_eq!(g17(0.0), "0");
        assert_eq!(g17(-0.0), "-0");
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(2.5), "2.5");
        assert_eq!(g17(-3.0), "-3");
        // 0.1 is not exactly representable; 17 digits expose that
        assert_eq!(g17(0.1), "0.10000000000000001");
        assert_eq!(g17(1e20), "1e+20");
        // 1.5e-7 stores as 1.49999999999999992...e-7; 17 digits expose it
        assert_eq!(g17(1.5e-7), "1.4999999999999999e-07");
        // 2^-30 is dyadic, so its 17 significant digits terminate
        assert_eq!(g17(2.0f64.powi(-30)), "9.3132257461547852e-10");
        assert_eq!(g17(123456.75), "123456.75");
    }

    #[test]
    fn g17_round_trips() {
        let values = [
            std::f64::consts::PI,
            -std::f64::consts::E,
            7.0f64.sinh(),
            1.0 / 3.0,
            6.02214076e23,
            -2.2250738585072014e-308,
        ];
        for &x in &values {
            let s = g17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{x} -> {s}");
        }
    }
}
