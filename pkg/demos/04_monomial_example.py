"""The monomial example in k[t1, ..., t_{n+2}].

Run: python3 demos/04_monomial_example.py
"""

from absorb.monomial import build_example_2_1, check_example_2_1, render_monomial

for n in (1, 2):
    ex = build_example_2_1(n)
    print(f"n = {n}: P = <{', '.join(ex.P.text())}>, I = <{', '.join(ex.I.text())}>")
    print(f"        IP = <{', '.join(ex.IP.text())}>, rad P = <{', '.join(ex.radical_P.text())}>")
    res = check_example_2_1(n, 3)
    show = lambda w: "(" + ", ".join(render_monomial(x) for x in w) + ")"
    print("  not n-absorbing, witness", show(res.non_absorbing_witness))
    print("  n-absorbing I-primary:", res.i_primary_status, show(res.i_primary_witness) if res.i_primary_witness else "")
    for flag in res.flags:
        print("  flag:", flag)
    print("  witnesses re-validated:", res.witnesses_revalidated)
