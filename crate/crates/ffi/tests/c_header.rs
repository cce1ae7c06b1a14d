use std::path::{Path, PathBuf};
use std::process::Command;

/// target/<profile>, found from the test binary's own location.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/treetopo.h")).unwrap();
    for name in ["tt_tree_new", "tt_tree_free", "tt_last_error", "tt_string_free", "tt_cli_run", "TT_STATUS_PANIC", "typedef struct TtTree TtTree;"] {
        assert!(h.contains(name), "{name} missing from the header");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = profile_dir().join("libtreetopo_ffi.a");
    assert!(lib.exists(), "{} was not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let manifest = env!("CARGO_MANIFEST_DIR");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let st = Command::new(&cc)
        .arg(format!("{manifest}/tests/smoke.c"))
        .arg(format!("-I{manifest}/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler");
    assert!(st.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
