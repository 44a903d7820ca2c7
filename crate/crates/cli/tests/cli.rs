use std::path::Path;
use std::process::{Command, Output};

use lambda_optics_core::{classify_grid, GridSpec, Method};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lambda-optics"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn lambda-optics")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn parse(text: &str) -> Table {
        let mut lines = text.lines().filter(|l| !l.starts_with('#'));
        let header = lines.next().unwrap().split(',').map(String::from).collect();
        let rows = lines
            .map(|l| l.split(',').map(String::from).collect())
            .collect();
        Table { header, rows }
    }

    fn read(path: &Path) -> Table {
        Table::parse(&std::fs::read_to_string(path).unwrap())
    }

    fn col(&self, name: &str) -> usize {
        self.header.iter().position(|h| h == name).unwrap()
    }

    fn f64s(&self, name: &str) -> Vec<f64> {
        let c = self.col(name);
        self.rows.iter().map(|r| r[c].parse().unwrap()).collect()
    }

    fn strs(&self, name: &str) -> Vec<&str> {
        let c = self.col(name);
        self.rows.iter().map(|r| r[c].as_str()).collect()
    }
}

#[test]
fn point_superluminal_with_gain() {
    let t = Table::parse(&stdout(&[
        "point",
        "--omega-c",
        "3",
        "--pump",
        "1.5",
        "--omega-p",
        "0.01",
    ]));
    assert_eq!(t.rows.len(), 1);
    assert_eq!(t.strs("class"), ["superluminal"]);
    assert!(t.f64s("chi_im")[0] < 0.0);
    assert_eq!(t.strs("error"), [""]);
    let pops: f64 = ["rho11", "rho22", "rho33"]
        .iter()
        .map(|c| t.f64s(c)[0])
        .sum();
    assert!((pops - 1.0).abs() < 1e-10);
}

#[test]
fn degenerate_point_exits_3() {
    let out = run(&["point", "--omega-p", "0", "--omega-c", "0", "--pump", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("singular"));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["point", "--bogus"][..],
        &["point", "--omega-c", "-1"],
        &["point", "--omega-c", "abc"],
        &["point", "--step", "0"],
        &[
            "sweep",
            "--variable",
            "delta_p",
            "--start",
            "1",
            "--stop",
            "1",
            "--count",
            "5",
        ],
        &[
            "sweep",
            "--variable",
            "delta_p",
            "--start",
            "0",
            "--stop",
            "1",
            "--count",
            "1",
        ],
        &[
            "sweep",
            "--variable",
            "gamma1",
            "--start",
            "0",
            "--stop",
            "1",
            "--count",
            "3",
        ],
        &["sweep", "--variable", "delta_p"],
        &["sweep", "--preset", "fig9"],
        &["regionmap", "--n-r", "1"],
        &["regionmap", "--delta-c", "0.5"],
        &["critical", "--pump", "-1"],
        &["critical", "--omega-c", "0"],
        &["nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn eit_absorption_peaks_at_coupling_rabi_frequency() {
    let t = Table::parse(&stdout(&[
        "sweep",
        "--variable",
        "delta_p",
        "--start",
        "-6",
        "--stop",
        "6",
        "--count",
        "1201",
        "--pump",
        "0",
        "--omega-c",
        "3",
    ]));
    let dp = t.f64s("delta_p");
    let im = t.f64s("chi_im");
    let argmax = |keep: &dyn Fn(f64) -> bool| {
        (0..dp.len())
            .filter(|&i| keep(dp[i]))
            .max_by(|&a, &b| im[a].total_cmp(&im[b]))
            .map(|i| dp[i])
            .unwrap()
    };
    assert!((argmax(&|d| d < 0.0) + 3.0).abs() <= 0.01);
    assert!((argmax(&|d| d > 0.0) - 3.0).abs() <= 0.01);
    assert!(dp.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn per_row_failures_go_to_error_column() {
    let text = stdout(&[
        "sweep",
        "--variable",
        "omega_c",
        "--start",
        "0",
        "--stop",
        "1",
        "--count",
        "2",
        "--omega-p",
        "0",
    ]);
    let t = Table::parse(&text);
    let errors = t.strs("error");
    assert!(errors[0].contains("singular"));
    let class = t.strs("class");
    assert_eq!(class[0], "");
    assert!(!class[1].is_empty());
    assert_eq!(errors[1], "");
    assert!(t.rows.iter().all(|r| r.len() == t.header.len()));
}

fn preset(name: &str) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    stdout(&[
        "sweep",
        "--preset",
        name,
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    dir
}

fn line_center(t: &Table, column: &str) -> f64 {
    let dp = t.f64s("delta_p");
    let i = dp.iter().position(|d| d.abs() < 1e-12).unwrap();
    t.f64s(column)[i]
}

#[test]
fn fig3_preset_files_and_gain() {
    let dir = preset("fig3");
    let mut names: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "fig3_omega_c_1.25.csv",
            "fig3_omega_c_2.08.csv",
            "fig3_omega_c_3.csv"
        ]
    );

    let path = dir.path().join("fig3_omega_c_1.25.csv");
    let text = std::fs::read_to_string(&path).unwrap();
    for pinned in [
        "# preset: fig3",
        "# curve: omega_c = 1.25 (solid)",
        "# config: omega_p = 1.00000000000e-2",
        "# config: pump_R = 1.50000000000e0",
        "# config: delta_c = 0.00000000000e0",
        "# config: gamma1 = 1.00000000000e0",
        "# config: gamma2 = 1.00000000000e0",
    ] {
        assert!(text.lines().any(|l| l == pinned), "missing {pinned}");
    }

    let t = Table::read(&path);
    let dp = t.f64s("delta_p");
    let im = t.f64s("chi_im");
    let near: Vec<f64> = (0..dp.len())
        .filter(|&i| dp[i].abs() <= 0.1)
        .map(|i| im[i])
        .collect();
    assert!(near.len() > 10);
    assert!(near.iter().all(|&x| x < 0.0));

    // the slope at line center changes sign across the three couplings
    let s: Vec<f64> = ["1.25", "2.08", "3"]
        .iter()
        .map(|v| {
            line_center(
                &Table::read(&dir.path().join(format!("fig3_omega_c_{v}.csv"))),
                "slope",
            )
        })
        .collect();
    assert!(s[0] > 0.0 && s[2] < 0.0);
    assert!(s[1].abs() < 1e-2 * s[0].abs());
}

#[test]
fn fig4_preset_dashed_curve_is_near_zero_slope() {
    let dir = preset("fig4");
    let slope = |r: &str| {
        let t = Table::read(&dir.path().join(format!("fig4_pump_R_{r}.csv")));
        assert!(t.strs("error").iter().all(|e| e.is_empty()));
        line_center(&t, "slope")
    };
    let (s08, s114, s15) = (slope("0.8"), slope("1.14"), slope("1.5"));
    assert!(s08 > 0.0);
    assert!(s15 < 0.0);
    assert!(s114.abs() <= 1e-2 * s08.abs(), "{s114} vs {s08}");
}

#[test]
fn fig5b_preset_sign_window() {
    let dir = preset("fig5b");
    let t = Table::read(&dir.path().join("fig5b_omega_c_3.csv"));
    let r = t.f64s("pump_R");
    let ng = t.f64s("ng_minus_1");
    let negative: Vec<f64> = (0..r.len())
        .filter(|&i| ng[i] < 0.0)
        .map(|i| r[i])
        .collect();
    let (lo, hi) = (negative[0], *negative.last().unwrap());
    assert!((lo - 1.1408).abs() <= 0.02, "{lo}");
    assert!((hi - 4.6483).abs() <= 0.02, "{hi}");
    // one contiguous window
    assert_eq!(
        negative.len(),
        r.iter().filter(|&&x| x >= lo && x <= hi).count()
    );
}

#[test]
fn regionmap_analytic_default() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&["regionmap", "--out-dir", dir.path().to_str().unwrap()]);
    let grid = Table::read(&dir.path().join("regionmap.csv"));
    assert_eq!(grid.header, ["pump_R", "omega_c", "class"]);
    assert_eq!(grid.rows.len(), 3600);
    let r = grid.f64s("pump_R");
    let class = grid.strs("class");
    let sup: Vec<usize> = (0..r.len())
        .filter(|&i| class[i] == "superluminal")
        .collect();
    assert!(!sup.is_empty());
    assert!(sup.iter().all(|&i| r[i] > 1.0));

    let boundary = Table::read(&dir.path().join("regionmap_boundary.csv"));
    assert_eq!(boundary.header, ["pump_R", "omega_c_necessary"]);
    let min = boundary
        .f64s("omega_c_necessary")
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    assert!((min - 1.99).abs() <= 0.01, "{min}");
}

#[test]
fn regionmap_numeric_agrees_with_analytic_in_interior() {
    let read = |method: &str| {
        let dir = tempfile::tempdir().unwrap();
        stdout(&[
            "regionmap",
            "--method",
            method,
            "--out-dir",
            dir.path().to_str().unwrap(),
        ]);
        Table::read(&dir.path().join("regionmap.csv"))
    };
    let analytic = read("analytic");
    let numeric = read("numeric");
    assert!(numeric.strs("class").iter().all(|&c| c != "error"));

    let reference = classify_grid(&GridSpec::new(
        (0.1, 6.0),
        (0.5, 4.0),
        60,
        60,
        Method::Analytic,
    ))
    .unwrap();
    let (a, n) = (analytic.strs("class"), numeric.strs("class"));
    let mut interior = 0;
    for k in 0..a.len() {
        let (i_r, i_omega) = (k % 60, k / 60);
        if reference.near_boundary(i_r, i_omega) {
            continue;
        }
        interior += 1;
        assert_eq!(a[k], n[k], "cell {k}");
    }
    assert!(interior > 3000);
}

#[test]
fn critical_reports() {
    let parse = |text: &str| -> Vec<(String, String)> {
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("quantity,value"));
        lines
            .map(|l| {
                let (k, v) = l.split_once(',').unwrap();
                (k.to_string(), v.to_string())
            })
            .collect()
    };
    let get = |kv: &[(String, String)], key: &str| {
        kv.iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.clone())
            .unwrap()
    };

    let kv = parse(&stdout(&["critical", "--pump", "1.5"]));
    let nec: f64 = get(&kv, "omega_c_necessary").parse().unwrap();
    assert!((nec - 2.077).abs() < 5e-4);
    let oc_min: f64 = get(&kv, "omega_c_min").parse().unwrap();
    assert!((oc_min - 1.99).abs() < 0.01);

    let kv = parse(&stdout(&["critical", "--omega-c", "3"]));
    let r1: f64 = get(&kv, "pump_root_1").parse().unwrap();
    let r2: f64 = get(&kv, "pump_root_2").parse().unwrap();
    assert!((r1 - 1.14).abs() <= 0.01);
    assert!((r2 - 4.65).abs() <= 0.01);

    let kv = parse(&stdout(&["critical", "--pump", "0.8", "--omega-c", "1.5"]));
    assert_eq!(get(&kv, "omega_c_necessary"), "none");
    assert_eq!(get(&kv, "pump_roots"), "none");
}

#[test]
fn output_is_byte_deterministic() {
    let args = [
        "sweep",
        "--variable",
        "pump_R",
        "--start",
        "0.2",
        "--stop",
        "8",
        "--count",
        "200",
        "--omega-c",
        "3",
    ];
    let first = run(&args).stdout;
    assert!(!first.is_empty());
    assert_eq!(first, run(&args).stdout);
    assert!(!first.contains(&b'\r'));

    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        stdout(&[
            "regionmap",
            "--method",
            "numeric",
            "--n-r",
            "20",
            "--n-omega",
            "20",
            "--out-dir",
            d.path().to_str().unwrap(),
        ]);
    }
    for f in ["regionmap.csv", "regionmap_boundary.csv"] {
        assert_eq!(
            std::fs::read(dirs[0].path().join(f)).unwrap(),
            std::fs::read(dirs[1].path().join(f)).unwrap()
        );
    }
}

#[test]
fn sweep_out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let args = [
        "sweep",
        "--variable",
        "delta_p",
        "--start",
        "-1",
        "--stop",
        "1",
        "--count",
        "11",
        "--omega-c",
        "2",
        "--pump",
        "1.2",
    ];
    let printed = stdout(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert!(stdout(&with_out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), printed);
}

#[test]
fn config_file_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(
        &cfg,
        "# fig 3 point\nomega_c = 2.5\npump_R = 1.5\nomega_p = 0.02\n",
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();

    let text = stdout(&["point", "--config", cfg, "--omega-c", "3"]);
    assert!(text
        .lines()
        .any(|l| l == "# config: omega_c = 3.00000000000e0"));
    assert!(text
        .lines()
        .any(|l| l == "# config: pump_R = 1.50000000000e0"));
    assert!(text
        .lines()
        .any(|l| l == "# config: omega_p = 2.00000000000e-2"));
    assert!(text
        .lines()
        .any(|l| l == "# config: gamma1 = 1.00000000000e0"));
    let t = Table::parse(&text);
    assert_eq!(t.f64s("omega_c"), [3.0]);
    assert_eq!(t.f64s("pump_R"), [1.5]);

    let bad = dir.path().join("bad.cfg");
    std::fs::write(&bad, "omega = 1\n").unwrap();
    assert_eq!(
        run(&["point", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let missing = dir.path().join("missing.cfg");
    assert_eq!(
        run(&["point", "--config", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
