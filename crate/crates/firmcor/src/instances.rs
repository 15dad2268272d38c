//! Bundled example instances and the `firmcor-1` file format.

use crate::algmod::{action_tensor, Algebra, Bimodule};
use crate::comatrix::{build_comatrix, validate_data, ComatrixCoring, ComatrixData};
use crate::corings::{validate_comodule, validate_coring, Comodule, Coring};
use crate::exactlin::{Field, Mat};
use crate::galois::GaloisSetting;
use crate::tensorcalc;
use crate::{Error, Result};
use serde_json::{json, Value};
use std::path::Path;

pub const FORMAT: &str = "firmcor-1";

/// A coring over `A` with a right coaction on `Σ`.
#[derive(Debug, Clone)]
pub struct Target {
    pub coring: Coring,
    /// `Σ → Σ ⊗_A C` in quotient coordinates.
    pub coaction: Mat,
}

#[derive(Debug, Clone)]
pub struct InstanceBundle {
    pub name: String,
    pub notes: String,
    pub data: ComatrixData,
    pub target: Option<Target>,
}

impl InstanceBundle {
    pub fn comatrix(&self) -> Result<ComatrixCoring> {
        build_comatrix(&self.data)
    }

    /// `Σ` over the target coring, or over its own comatrix coring.
    pub fn setting(&self) -> Result<GaloisSetting> {
        let cm = self.comatrix()?;
        self.setting_for(&cm)
    }

    pub fn setting_for(&self, cm: &ComatrixCoring) -> Result<GaloisSetting> {
        match &self.target {
            Some(t) => GaloisSetting::external(cm, t.coring.clone(), t.coaction.clone()),
            None => GaloisSetting::from_comatrix(cm),
        }
    }
}

fn ring_pair(p: u32) -> Algebra {
    let mut mult = Mat::zeros(p, 2, 4);
    mult.set(0, 0, 1);
    mult.set(1, 3, 1);
    Algebra::new("F2xF2", p, 2, mult, Some(vec![1, 1]))
}

/// `F_4 = F_2[x]/(x² + x + 1)` on the basis `1, x`.
pub fn f4() -> Algebra {
    let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]];
    Algebra::from_tensor("F4", 2, &t, Some(vec![1, 0])).expect("F4 tensor")
}

/// `A` as a `(B, A)`- and an `(A, B)`-bimodule through `incl : B → A`.
fn regular_pair(a: &Algebra, b: &Algebra, incl: &Mat) -> (Bimodule, Bimodule) {
    let p = a.p;
    let ia = Mat::identity(p, a.dim);
    let sigma = Bimodule::new("Sigma", p, a.dim).with_left(b, a.mult.mul(&incl.kron(&ia))).with_right(a, a.mult.clone());
    let sigma_prime =
        Bimodule::new("SigmaPrime", p, a.dim).with_left(a, a.mult.clone()).with_right(b, a.mult.mul(&ia.kron(incl)));
    (sigma, sigma_prime)
}

/// `F_p^n` with trivial scalar actions and its dual, paired canonically.
fn column_pair(p: u32) -> impl Fn(usize) -> (Bimodule, Bimodule, Mat) {
    move |n| {
        let f = Algebra::ground(p);
        let sigma = Bimodule::new("Sigma", p, n).with_left(&f, Mat::identity(p, n)).with_right(&f, Mat::identity(p, n));
        let sigma_prime =
            Bimodule::new("SigmaPrime", p, n).with_left(&f, Mat::identity(p, n)).with_right(&f, Mat::identity(p, n));
        let mut mu = Mat::zeros(p, 1, n * n);
        for i in 0..n {
            mu.set(0, i * n + i, 1);
        }
        (sigma, sigma_prime, mu)
    }
}

pub fn trivial() -> InstanceBundle {
    let f = Algebra::ground(2);
    let m = Bimodule::regular(&f);
    InstanceBundle {
        name: "trivial".into(),
        notes: "every ring, module and coring is F2".into(),
        data: ComatrixData {
            name: "trivial".into(),
            a: f.clone(),
            b: f.clone(),
            r: f.clone(),
            sigma: m.clone().renamed("Sigma"),
            sigma_prime: m.renamed("SigmaPrime"),
            mu: Mat::identity(2, 1),
            iota: Mat::identity(2, 1),
        },
        target: None,
    }
}

pub fn sweedler_f4_f2() -> InstanceBundle {
    let a = f4();
    let b = Algebra::ground(2);
    let incl = Mat::from_rows(2, 1, &[vec![1], vec![0]]);
    let (sigma, sigma_prime) = regular_pair(&a, &b, &incl);
    let mut iota = Mat::zeros(2, 4, 1);
    iota.set(0, 0, 1);
    let data = ComatrixData {
        name: "sweedler-f4-f2".into(),
        a: a.clone(),
        b: b.clone(),
        r: b.clone(),
        sigma,
        sigma_prime,
        mu: a.mult.clone(),
        iota,
    };
    // Σ = A over the Sweedler coring, a ↦ 1 ⊗ (1 ⊗ a)
    let coring = Coring::sweedler(&a, &b, &incl).expect("Sweedler coring");
    let ia = Mat::identity(2, a.dim);
    let u = Mat::column_vector(2, a.unit.as_ref().expect("unital"));
    let a_ab = Bimodule::regular(&a).with_right(&b, a.mult.mul(&ia.kron(&incl)));
    let a_ba = Bimodule::regular(&a).with_left(&b, a.mult.mul(&incl.kron(&ia)));
    let t = tensorcalc::chain(&[&a_ab, &a_ba]).expect("A ⊗_B A");
    let sigma_r = build_comatrix(&data).expect("Sweedler comatrix").sigma_r;
    let sc = tensorcalc::chain(&[&sigma_r, &coring.carrier]).expect("Σ ⊗_A C");
    let coaction = sc.proj().mul(&u.kron(&t.proj().mul(&u.kron(&ia))));
    InstanceBundle {
        name: "sweedler-f4-f2".into(),
        notes: "A = F4 over B = R = F2; Sigma = Sigma' = A, mu the product, iota(1) = 1 ⊗ 1; target the Sweedler coring A ⊗_B A"
            .into(),
        data,
        target: Some(Target { coring, coaction }),
    }
}

pub fn projection_f2xf2() -> InstanceBundle {
    let a = Algebra::ground(2);
    let b = ring_pair(2);
    let incl_rows = Mat::from_rows(2, 2, &[vec![1, 0]]);
    let sigma = Bimodule::new("Sigma", 2, 1).with_left(&b, incl_rows.clone()).with_right(&a, Mat::identity(2, 1));
    let sigma_prime = Bimodule::new("SigmaPrime", 2, 1).with_left(&a, Mat::identity(2, 1)).with_right(&b, incl_rows);
    InstanceBundle {
        name: "projection-f2xf2".into(),
        notes: "B = R = F2xF2 acting on A = F2 through the first projection; flat but not faithfully flat".into(),
        data: ComatrixData {
            name: "projection-f2xf2".into(),
            a,
            b: b.clone(),
            r: b,
            sigma,
            sigma_prime,
            mu: Mat::identity(2, 1),
            iota: Mat::from_rows(2, 2, &[vec![1, 0]]),
        },
        target: None,
    }
}

pub fn dual_basis_matrix() -> InstanceBundle {
    let f = Algebra::ground(2);
    let (sigma, sigma_prime, mu) = column_pair(2)(2);
    InstanceBundle {
        name: "dual-basis-matrix".into(),
        notes: "Sigma = F2^2 with its dual basis, R = M2(F2) mapped onto Sigma ⊗ Sigma*".into(),
        data: ComatrixData {
            name: "dual-basis-matrix".into(),
            a: f.clone(),
            b: f,
            r: Algebra::matrices(2, 2),
            sigma,
            sigma_prime,
            mu,
            iota: Mat::identity(2, 4),
        },
        target: None,
    }
}

/// Matrices of `M_n(F_p)` supported in column 0, on the basis `E_i0`.
pub fn first_column_ring(p: u32, n: usize) -> Algebra {
    let mut mult = Mat::zeros(p, n, n * n);
    for i in 0..n {
        mult.set(i, i * n, 1);
    }
    Algebra::new(&format!("M{n}e00"), p, n, mult, None)
}

pub fn corner_idempotents() -> InstanceBundle {
    let f = Algebra::ground(2);
    let n = 3;
    let (sigma, sigma_prime, mu) = column_pair(2)(n);
    let mut iota = Mat::zeros(2, n * n, n);
    for i in 0..n {
        iota.set(i * n, i, 1);
    }
    InstanceBundle {
        name: "corner-idempotents".into(),
        notes: "Sigma = F2^3 with the non-unital ring R = M3(F2) e00 acting through Sigma ⊗ Sigma*".into(),
        data: ComatrixData {
            name: "corner-idempotents".into(),
            a: f.clone(),
            b: f,
            r: first_column_ring(2, n),
            sigma,
            sigma_prime,
            mu,
            iota,
        },
        target: None,
    }
}

pub fn bundled() -> Vec<InstanceBundle> {
    vec![trivial(), sweedler_f4_f2(), projection_f2xf2(), dual_basis_matrix(), corner_idempotents()]
}

pub fn bundled_names() -> Vec<String> {
    bundled().into_iter().map(|b| b.name).collect()
}

pub fn by_name(name: &str) -> Result<InstanceBundle> {
    bundled().into_iter().find(|b| b.name == name).ok_or_else(|| Error::UnknownInstance(name.to_string()))
}

/// A bundled name or a path to a `firmcor-1` file.
pub fn resolve(spec: &str) -> Result<InstanceBundle> {
    match by_name(spec) {
        Ok(b) => Ok(b),
        Err(_) if Path::new(spec).exists() => load(Path::new(spec)),
        Err(_) if spec.ends_with(".json") || spec.contains('/') => Err(Error::Io(format!("{spec}: no such file"))),
        Err(e) => Err(e),
    }
}

fn mat_json(m: &Mat) -> Value {
    json!(m.to_rows())
}

fn algebra_json(a: &Algebra) -> Value {
    let mut v = json!({ "name": a.name, "mult": a.tensor(), "unital": a.unit.is_some() });
    if let Some(u) = &a.unit {
        v["unit"] = json!(u);
    }
    v
}

fn bimodule_json(m: &Bimodule, left: &str, right: &str) -> Value {
    let l = m.left.as_ref().expect("left action");
    let r = m.right.as_ref().expect("right action");
    json!({
        "dim": m.dim,
        "left": left,
        "right": right,
        "left_action": action_tensor(&l.mat, l.ring.dim, m.dim),
        "right_action": action_tensor(&r.mat, m.dim, r.ring.dim),
    })
}

pub fn to_json(b: &InstanceBundle) -> Value {
    let d = &b.data;
    let mut v = json!({
        "format": FORMAT,
        "name": b.name,
        "notes": b.notes,
        "p": d.p(),
        "spaces": {
            "A": d.a.dim, "B": d.b.dim, "R": d.r.dim, "Sigma": d.s(), "SigmaPrime": d.s_prime(),
        },
        "algebras": { "A": algebra_json(&d.a), "B": algebra_json(&d.b), "R": algebra_json(&d.r) },
        "bimodules": {
            "Sigma": bimodule_json(&d.sigma, "B", "A"),
            "SigmaPrime": bimodule_json(&d.sigma_prime, "A", "B"),
        },
        "maps": {
            "mu": { "domain": ["SigmaPrime", "Sigma"], "codomain": ["A"], "matrix": mat_json(&d.mu) },
            "iota": { "domain": ["R"], "codomain": ["Sigma", "SigmaPrime"], "matrix": mat_json(&d.iota) },
        },
    });
    if let Some(t) = &b.target {
        v["coring"] = json!({
            "name": t.coring.name,
            "carrier": bimodule_json(&t.coring.carrier, "A", "A"),
            "delta": mat_json(&t.coring.delta),
            "eps": mat_json(&t.coring.eps),
        });
        v["comodules"] = json!({ "Sigma": { "side": "right", "coaction": mat_json(&t.coaction) } });
    }
    v
}

/// Canonical text: sorted keys, no whitespace, entries reduced mod `p`.
pub fn save_string(b: &InstanceBundle) -> String {
    to_json(b).to_string()
}

pub fn save(b: &InstanceBundle, path: &Path) -> Result<()> {
    std::fs::write(path, save_string(b) + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<InstanceBundle> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// Load and re-save.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(save_string(&parse(text)?))
}

/// Line and column (1-based) of the first occurrence of `"key"`.
fn locate(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    match text.find(&needle) {
        None => (1, 1),
        Some(off) => {
            let before = &text[..off];
            let line = before.matches('\n').count() + 1;
            let col = off - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, col)
        }
    }
}

struct Reader<'a> {
    text: &'a str,
    p: u32,
}

impl Reader<'_> {
    fn err(&self, key: &str, message: impl Into<String>) -> Error {
        let (line, column) = locate(self.text, key);
        Error::Parse { line, column, message: message.into() }
    }

    fn get<'v>(&self, v: &'v Value, key: &str) -> Result<&'v Value> {
        v.get(key).ok_or_else(|| self.err(key, format!("missing key {key:?}")))
    }

    fn entry(&self, v: &Value, key: &str) -> Result<u32> {
        let x = v.as_i64().ok_or_else(|| self.err(key, format!("{key}: expected an integer, found {v}")))?;
        Ok(x.rem_euclid(i64::from(self.p)) as u32)
    }

    fn vector(&self, v: &Value, key: &str) -> Result<Vec<u32>> {
        let arr = v.as_array().ok_or_else(|| self.err(key, format!("{key}: expected an array")))?;
        arr.iter().map(|x| self.entry(x, key)).collect()
    }

    fn matrix(&self, v: &Value, key: &str, rows: usize, cols: usize) -> Result<Mat> {
        let arr = v.as_array().ok_or_else(|| self.err(key, format!("{key}: expected an array of rows")))?;
        let rs: Vec<Vec<u32>> = arr.iter().map(|r| self.vector(r, key)).collect::<Result<_>>()?;
        if rs.len() != rows || rs.iter().any(|r| r.len() != cols) {
            return Err(self.err(key, format!("{key}: expected a {rows}x{cols} matrix")));
        }
        Ok(Mat::from_rows(self.p, cols, &rs))
    }

    fn tensor(&self, v: &Value, key: &str) -> Result<Vec<Vec<Vec<u32>>>> {
        let arr = v.as_array().ok_or_else(|| self.err(key, format!("{key}: expected a 3-index array")))?;
        arr.iter()
            .map(|a| {
                let inner = a.as_array().ok_or_else(|| self.err(key, format!("{key}: expected a 3-index array")))?;
                inner.iter().map(|x| self.vector(x, key)).collect::<Result<Vec<_>>>()
            })
            .collect()
    }

    fn dim(&self, v: &Value, key: &str) -> Result<usize> {
        v.as_u64().map(|d| d as usize).ok_or_else(|| self.err(key, format!("{key}: expected a dimension")))
    }

    fn algebra(&self, all: &Value, name: &str) -> Result<Algebra> {
        let v = self.get(all, name)?;
        let t = self.tensor(self.get(v, "mult")?, "mult")?;
        let unital = self.get(v, "unital")?.as_bool().ok_or_else(|| self.err("unital", "unital: expected a boolean"))?;
        let unit = match (unital, v.get("unit")) {
            (true, Some(u)) => Some(self.vector(u, "unit")?),
            (true, None) => return Err(self.err(name, format!("{name} is unital but has no unit"))),
            (false, _) => None,
        };
        let label = v.get("name").and_then(Value::as_str).unwrap_or(name);
        Algebra::from_tensor(label, self.p, &t, unit).map_err(|e| self.err("mult", e.to_string()))
    }

    fn bimodule(&self, v: &Value, name: &str, left: &Algebra, right: &Algebra) -> Result<Bimodule> {
        let dim = self.dim(self.get(v, "dim")?, "dim")?;
        let lt = self.tensor(self.get(v, "left_action")?, "left_action")?;
        let rt = self.tensor(self.get(v, "right_action")?, "right_action")?;
        let lm = Bimodule::left_from_tensor(self.p, left, dim, &lt).map_err(|e| self.err("left_action", e.to_string()))?;
        let rm = Bimodule::right_from_tensor(self.p, right, dim, &rt).map_err(|e| self.err("right_action", e.to_string()))?;
        Ok(Bimodule::new(name, self.p, dim).with_left(left, lm).with_right(right, rm))
    }
}

/// Parse and fully validate a `firmcor-1` document.
pub fn parse(text: &str) -> Result<InstanceBundle> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    let pre = Reader { text, p: 2 };
    match pre.get(&v, "format")?.as_str() {
        Some(FORMAT) => {}
        other => return Err(pre.err("format", format!("unsupported format {other:?}"))),
    }
    let p = pre.get(&v, "p")?.as_u64().ok_or_else(|| pre.err("p", "p: expected a positive integer"))?;
    let p = u32::try_from(p).map_err(|_| pre.err("p", "p is too large"))?;
    Field::new(p).map_err(|e| pre.err("p", format!("p = {p}: {e}")))?;
    let rd = Reader { text, p };
    let name = rd.get(&v, "name")?.as_str().ok_or_else(|| rd.err("name", "name: expected a string"))?.to_string();
    let notes = v.get("notes").and_then(Value::as_str).unwrap_or("").to_string();
    let algs = rd.get(&v, "algebras")?;
    let (a, b, r) = (rd.algebra(algs, "A")?, rd.algebra(algs, "B")?, rd.algebra(algs, "R")?);
    let bims = rd.get(&v, "bimodules")?;
    let sigma = rd.bimodule(rd.get(bims, "Sigma")?, "Sigma", &b, &a)?;
    let sigma_prime = rd.bimodule(rd.get(bims, "SigmaPrime")?, "SigmaPrime", &a, &b)?;
    if let Some(spaces) = v.get("spaces") {
        for (key, d) in [("A", a.dim), ("B", b.dim), ("R", r.dim), ("Sigma", sigma.dim), ("SigmaPrime", sigma_prime.dim)] {
            if let Some(x) = spaces.get(key) {
                if rd.dim(x, key)? != d {
                    return Err(rd.err("spaces", format!("spaces.{key} = {x} but the data has dimension {d}")));
                }
            }
        }
    }
    let maps = rd.get(&v, "maps")?;
    let (s, k) = (sigma.dim, sigma_prime.dim);
    let mu = rd.matrix(rd.get(rd.get(maps, "mu")?, "matrix")?, "mu", a.dim, k * s)?;
    let iota = rd.matrix(rd.get(rd.get(maps, "iota")?, "matrix")?, "iota", s * k, r.dim)?;
    let data = ComatrixData { name: name.clone(), a: a.clone(), b, r, sigma, sigma_prime, mu, iota };
    validate_data(&data)?;
    let target = match v.get("coring") {
        None => None,
        Some(cv) => {
            let carrier = rd.bimodule(rd.get(cv, "carrier")?, "C", &a, &a)?;
            let cname = cv.get("name").and_then(Value::as_str).unwrap_or("C");
            let cc = tensorcalc::chain(&[&carrier, &carrier])?;
            let delta = rd.matrix(rd.get(cv, "delta")?, "delta", cc.dim(), carrier.dim)?;
            let eps = rd.matrix(rd.get(cv, "eps")?, "eps", a.dim, carrier.dim)?;
            let coring = Coring::new(cname, &a, carrier, delta, eps)?;
            let rep = validate_coring(&coring)?;
            if !rep.ok() {
                return Err(Error::Validation(format!("coring: {}", rep.summary())));
            }
            let cm = build_comatrix(&data)?;
            let com = rd.get(rd.get(&v, "comodules")?, "Sigma")?;
            let sc = tensorcalc::chain(&[&cm.sigma_r, &coring.carrier])?;
            let coaction = rd.matrix(rd.get(com, "coaction")?, "coaction", sc.dim(), s)?;
            let rho = Comodule::right("Sigma", &coring, cm.sigma_r.clone(), coaction.clone())?;
            let rep = validate_comodule(&rho, &coring)?;
            if !rep.ok() {
                return Err(Error::Validation(format!("Sigma comodule: {}", rep.summary())));
            }
            Some(Target { coring, coaction })
        }
    };
    let bundle = InstanceBundle { name, notes, data, target };
    bundle.comatrix()?;
    Ok(bundle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_instances_build() {
        for b in bundled() {
            validate_data(&b.data).unwrap_or_else(|e| panic!("{}: {e}", b.name));
            let cm = b.comatrix().unwrap_or_else(|e| panic!("{}: {e}", b.name));
            if b.name == "sweedler-f4-f2" {
                assert_eq!(cm.coring.dim(), 4);
            }
            if b.name == "trivial" {
                assert_eq!(cm.coring.dim(), 1);
            }
        }
    }

    #[test]
    fn round_trip_is_stable() {
        for b in bundled() {
            let s = save_string(&b);
            let again = canonicalize(&s).unwrap_or_else(|e| panic!("{}: {e}", b.name));
            assert_eq!(s, again, "{}", b.name);
        }
    }

    #[test]
    fn non_prime_is_parse_error() {
        let s = save_string(&trivial()).replace("\"p\":2", "\"p\":4");
        assert!(matches!(parse(&s), Err(Error::Parse { .. })));
    }

    #[test]
    fn broken_json_is_located() {
        match parse("{\n  \"format\": \"firmcor-1\",\n  oops }") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }
}
