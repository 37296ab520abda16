use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn sesqui(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sesqui")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("sesqui-cli-{name}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, contents).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn theorem_on_four_simplex_boundary() {
    let s = Scratch::new("bd4");
    let out = s.path("s.scx");
    assert_eq!(code(&sesqui(&["gen", "simplex-boundary:5", "-o", &out])), 0);
    let o = sesqui(&["theorem", &out, "--barycentric"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("outcome: confirmed"));
    assert!(text.contains("kappa: 1/2^0 (1)"));
    assert!(text.contains("requires kappa >= 0: pass"));
}

#[test]
fn theorem_on_tetrahedron_and_cycle() {
    let s = Scratch::new("small");
    let tet = s.file("t.scx", "a b c d\n");
    let o = sesqui(&["theorem", &tet, "--barycentric", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["subdivision"]["kappa"]["exact"], "0/2^0");
    assert_eq!(v["outcome"], "confirmed");

    let cycle = s.file("c.scx", "a b\nb c\nc d\na d\n");
    let edges = s.file("c.sched", "a b\nb c\nc d\na d\n");
    let o = sesqui(&["theorem", &cycle, "--schedule", &edges]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("kappa: -1/2^0 (-1)"));
}

#[test]
fn exit_codes() {
    let s = Scratch::new("codes");
    let even = s.file("e.scx", "a b c\n");
    let o = sesqui(&["theorem", &even, "--barycentric"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("hypothesis failed: odd-dimension"));

    let big = s.path("big.scx");
    assert_eq!(code(&sesqui(&["gen", "stacked-sphere:1:30:5", "-o", &big])), 0);
    let o = sesqui(&["theorem", &big, "--barycentric", "--cap-facets", "10"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("hypothesis not established"));
    assert_eq!(code(&sesqui(&["check", &big, "--kind", "constructible", "--cap-facets", "10"])), 2);

    assert_eq!(code(&sesqui(&["fvec", &s.path("missing.scx")])), 3);
    let bad = s.file("bad.scx", "a b$\n");
    assert_eq!(code(&sesqui(&["fvec", &bad])), 3);
    assert_eq!(code(&sesqui(&["theorem", &even])), 3);
    assert_eq!(code(&sesqui(&["gen", "torus:3"])), 3);

    let disjoint = s.file("d.scx", "a b\nc d\n");
    assert_eq!(code(&sesqui(&["check", &disjoint, "--kind", "shellable"])), 1);
}

#[test]
fn check_then_verify_round_trip() {
    let s = Scratch::new("verify");
    let oct = s.path("o.scx");
    assert_eq!(code(&sesqui(&["gen", "cross-polytope:3", "-o", &oct])), 0);
    for kind in ["shellable", "constructible", "sesquiconstructible"] {
        let cert = s.path(&format!("{kind}.cert"));
        assert_eq!(code(&sesqui(&["check", &oct, "--kind", kind, "--cert-out", &cert])), 0);
        let o = sesqui(&["verify", &oct, &cert]);
        assert_eq!(code(&o), 0, "{kind}: {}", stdout(&o));
    }
    let o = sesqui(&["classify", &oct, "--cert", &s.path("constructible.cert")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("sphere"));

    let tampered = s.file("bad.cert", "kind shellable\nsplit\n u 0 1 2 3 4 5 6\n v 6\n intersection\n simplex\n u-cert\n simplex\n v-cert\n simplex\nend\n");
    let o = sesqui(&["verify", &oct, &tampered]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("do not partition"));
}

#[test]
fn gen_certificates_feed_the_theorem_check() {
    let s = Scratch::new("gen");
    let (scx, cert) = (s.path("s.scx"), s.path("s.cert"));
    assert_eq!(code(&sesqui(&["gen", "stacked-sphere:3:8", "--seed", "3", "-o", &scx, "--cert-out", &cert])), 0);
    assert_eq!(code(&sesqui(&["verify", &scx, &cert])), 0);
    let o = sesqui(&["theorem", &scx, "--random-schedule", "--seed", "5", "--cert", &cert]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("supplied, verified"));
}

#[test]
fn reports_are_deterministic() {
    let s = Scratch::new("det");
    let scx = s.path("s.scx");
    assert_eq!(code(&sesqui(&["gen", "stacked-ball:3:6:2", "-o", &scx])), 0);
    for format in ["text", "json"] {
        let a = sesqui(&["theorem", &scx, "--random-schedule", "--seed", "1", "--format", format]);
        let b = sesqui(&["theorem", &scx, "--random-schedule", "--seed", "1", "--format", format]);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(code(&a), 0);
    }
}

#[test]
fn thin_wrappers() {
    let s = Scratch::new("wrap");
    let two = s.file("t.scx", "# figure\na b c\nb c d\n");
    assert_eq!(stdout(&sesqui(&["fvec", &two])), "1,4,5,2\n");
    assert_eq!(stdout(&sesqui(&["hvec", &two])), "1,1,0,0\n");
    assert_eq!(stdout(&sesqui(&["boundary", &two])), "a b\na c\nb d\nc d\n");
    assert_eq!(stdout(&sesqui(&["faces", &two, "--dim", "0"])), "a\nb\nc\nd\n");
    assert_eq!(stdout(&sesqui(&["faces", &two, "--dim", "-1"])), "EMPTYFACE\n");
    assert_eq!(stdout(&sesqui(&["subdivide", &two, "--face", "a b"])).lines().count(), 3);
    assert_eq!(stdout(&sesqui(&["barycentric", &two])).lines().count(), 12);
    assert_eq!(stdout(&sesqui(&["kappa", &two])), "0/2^0 (0)\n");
    let o = sesqui(&["flag", &two]);
    assert_eq!((code(&o), stdout(&o)), (0, "flag: yes\n".to_string()));
    let hollow = s.file("h.scx", "a b\nb c\na c\n");
    let o = sesqui(&["flag", &hollow]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("minimal non-face: {a b c}"));
    let strip = s.file("s.scx", "x y z\ny z w\n");
    let o = sesqui(&["iso", &two, &strip]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("isomorphic"));
    assert_eq!(code(&sesqui(&["iso", &two, &hollow])), 1);
}

#[test]
fn fixtures_parse() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let scx = dir.join("non_flag_sphere.scx");
    let sched = dir.join("non_flag_schedule.sched");
    let o = sesqui(&["subdivide", scx.to_str().unwrap(), "--schedule", sched.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let s = Scratch::new("fixture");
    let sub = s.file("sub.scx", &stdout(&o));
    assert_eq!(code(&sesqui(&["flag", &sub])), 1);
}
