"""Smoke tests for the python module."""

import lynsys


def test_words_and_order():
    assert lynsys.normalize("1(0101)") == "(10)"
    assert lynsys.normalize("100(11)") == "100(1)"
    assert lynsys.letter_at("2", 5) == 0
    assert lynsys.shift("(10)", 1) == "(01)"
    assert lynsys.compare("10", "11") == ("LESS", 2)
    assert lynsys.compare("1", "10") == ("EQUAL", None)
    assert lynsys.compare_with_fixed_point("(1)") == ("GREATER", 2)


def test_morphic_words():
    assert lynsys.phi_power(2) == "10011"
    prefix = lynsys.phi_prefix(43)
    assert "".join(map(str, prefix)) == "1001110010010011100111001110010010011100100"
    assert lynsys.thue_morse_runlengths(5) == [1, 2, 1, 1, 2]


def test_lyndon_machinery():
    assert lynsys.classify("(10)") == {"kind": "weak", "index": 2}
    assert lynsys.classify("(01)")["kind"] == "not-lyndon"
    assert lynsys.dstar("(2)") == "(10)"
    assert lynsys.rstar("(2)") == "(01)"
    assert lynsys.lyn_witness("(10)") == "(2)"
    assert lynsys.lyn_witness("(2)") is None
    assert lynsys.entropy_positive("(10)")
    assert not lynsys.entropy_positive("(10011)")


def test_counting():
    assert lynsys.hn("(10)", 3) == [1, 2, 4, 8]
    assert lynsys.count_interval("10", "01", "(10)") == 4
    assert lynsys.enumerate_words("(2)", 1) == ["2", "1", "0"]


def test_numeric():
    two = lynsys.beta("(10)")
    assert two["exact"] and two["lo_exact"] == "2"

    golden = lynsys.beta("1(0)")
    assert golden["lo"].startswith("1.6180339887498948")
    assert golden["polynomial"] == [-1, -1, 1]

    value = lynsys.f_eval("(2)", "2")
    assert value["lo_exact"] == "-2/3" and value["hi_exact"] == "-2/3"

    report = lynsys.admissible("(10)")
    assert not report["admissible"] and report["lyn_witness"] == "(2)"
    assert lynsys.admissible("(2)")["admissible"]

    expansion = lynsys.expand("l", "100(11)", 32)
    assert expansion["word"] == "100(1)" and expansion["period_certified"]

    residual = lynsys.gf_residual("(10)", "1/4", 40)
    assert float(residual["hi"]) < 1e-9
    assert all(lynsys.omega_check(n) for n in range(6))


def main():
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL {name}: {exc}")
    if failures:
        raise SystemExit(f"{failures} smoke test(s) failed")
    print("python smoke: all passed")


if __name__ == "__main__":
    main()
