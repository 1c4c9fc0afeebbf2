"""Rauzy classes, strata and connected components of a few base permutations.

Run: python3 demos/01_classes_and_components.py
"""

from rauzyveech.forms import arf, component_label, quadratic_form
from rauzyveech.perm import format_permutation, hyperelliptic, rauzy_class, representatives, stratum_profile


def show(title, p, max_class_size=10**6):
    print(f"== {title}")
    print(format_permutation(p), end="")
    prof = stratum_profile(p)
    lab = component_label(p, max_class_size)
    print(f"   stratum {prof.name()}  genus {prof.genus}  component {lab.connected_component_name}")
    print(f"   Arf(Q) = {arf(quadratic_form(p))}  hyperelliptic: {lab.hyperelliptic}")


if __name__ == "__main__":
    show("tau(6)", representatives("tau-d", 6))
    show("sigma(8)", representatives("sigma-d", 8))
    show("tau(7), two zeros", representatives("tau-d", 7))
    show("hyperelliptic d=6", hyperelliptic(6))
    # class sizes grow quickly; hyperelliptic classes have 2^(d-1) - 1 vertices
    for d in range(4, 8):
        print(f"hyperelliptic class, d={d}: {len(rauzy_class(hyperelliptic(d)))} vertices")
    print(f"class of tau(6): {len(rauzy_class(representatives('tau-d', 6)))} vertices")
