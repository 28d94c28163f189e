use std::process::Command;

fn dbf(cache: &std::path::Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dbf"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn dims_table_row() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = dbf(
        dir.path(),
        &["table", "dims", "--nmax", "3", "--kmax", "3", "--jmax", "2"],
    );
    assert_eq!(code, 0);
    let n3: Vec<&str> = out.lines().skip_while(|l| *l != "dims n=3").collect();
    let row: Vec<&str> = n3[5].split_whitespace().collect();
    assert_eq!(row, ["3", "32", "50", "74"]);
}

#[test]
fn machine_table_lines() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = dbf(
        dir.path(),
        &[
            "--format", "machine", "table", "alt", "--nmin", "4", "--nmax", "4", "--kmax", "2",
            "--jmax", "0",
        ],
    );
    assert_eq!(code, 0);
    assert!(out.contains("TABLE alt n=4 k=2 j=0 VALUE 14 SOURCE conjecture"));
}

#[test]
fn eval_fermionic_line() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = dbf(dir.path(), &["eval", "--n", "3", "--k", "0", "--j", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "s[3] : 1\ns[2,1] : u1\ns[1,1,1] : u1^2\n");
    let (_, ones, _) = dbf(
        dir.path(),
        &["eval", "--n", "3", "--k", "3", "--j", "2", "--ones"],
    );
    assert_eq!(ones, "s[3] : 1\ns[2,1] : 18\ns[1,1,1] : 37\n");
}

#[test]
fn verify_main_and_all() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = dbf(
        dir.path(),
        &[
            "--format", "machine", "verify", "main", "--n", "3", "--k", "1", "--j", "1",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(out, "CHECK main n=3 k=1 j=1 STATUS match\n");
    let (code, first, _) = dbf(dir.path(), &["verify", "all", "--n", "3"]);
    assert_eq!(code, 0);
    let (_, second, _) = dbf(dir.path(), &["--threads", "1", "verify", "all", "--n", "3"]);
    assert_eq!(first, second);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = dbf(dir.path(), &["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("E_USAGE"));
    let (code, _, err) = dbf(dir.path(), &["verify", "nonsense", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("E_PARSE"));
    let (code, _, err) = dbf(dir.path(), &["oracle", "--n", "5", "--k", "1", "--j", "0"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("E_RESOURCE"));
}

#[test]
fn cache_files_are_checked() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = dbf(dir.path(), &["oracle", "--n", "2", "--k", "1", "--j", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("oracle k=1 j=1 n=2\n"));
    let (_, cached, _) = dbf(dir.path(), &["oracle", "--n", "2", "--k", "1", "--j", "1"]);
    assert_eq!(out, cached);
    let path = dir.path().join("oracle.1.1.2.dat");
    let text = std::fs::read_to_string(&path)
        .unwrap()
        .replace("dim 1", "dim 2");
    std::fs::write(&path, text).unwrap();
    let (code, _, err) = dbf(dir.path(), &["oracle", "--n", "2", "--k", "1", "--j", "1"]);
    assert_eq!(code, 4);
    assert!(err.starts_with("E_CACHE_HASH"));
    let (_, list, _) = dbf(dir.path(), &["cache", "list"]);
    assert_eq!(list, "oracle.1.1.2.dat E_CACHE_HASH\n");
}
