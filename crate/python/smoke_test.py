"""Smoke test for the Python bindings: run with pytest or as a script."""

import dbflab_py as dbf


def test_generic_bosonic():
    text, source = dbf.generic_bosonic(3)
    assert source == "embedded"
    assert len(text.splitlines()) == 5


def test_eval_and_counts():
    assert dbf.eval_main(3, 0, 1) == "s[3] : 1\ns[2,1] : u1\ns[1,1,1] : u1^2\n"
    assert dbf.count("dims", 5, 2, 0) == ("1296", "1")
    assert dbf.count("alt", 4, 2, 0) == ("14", "1")


def test_oracle_and_verify():
    assert dbf.oracle(1, 1, 2).startswith("oracle k=1 j=1 n=2")
    assert all(line.startswith("CHECK main n=3") for line in dbf.verify("main", 3))
    assert all("STATUS mismatch" not in line for line in dbf.verify("main", 3))


def test_macdonald():
    assert dbf.htilde("[2]") == "s[2] : 1\ns[1,1] : q\n"
    assert "s[1,1,1] : q^3" in dbf.nabla_e(3)


def test_errors():
    try:
        dbf.formula("NOPE", 3)
    except ValueError as e:
        assert str(e).startswith("E_PARSE")
    else:
        raise AssertionError("expected an error")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
    print("ok")
