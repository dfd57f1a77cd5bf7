from ecom_cli.internals import system
from ecom_sdk.groups.subgroups import abelian_subgroups, center, derived_subgroup, maximal_abelian_subgroups


def execute(args):
    spec = system.get_spec(args)
    G = system.get_group(args, spec)
    system.print_info(args, f"Group {G.name} of order {G.order}")

    maximal = maximal_abelian_subgroups(G)
    abelian = abelian_subgroups(G)
    result = {
        "group": G.name,
        "order": G.order,
        "abelian": G.is_abelian,
        "associativity_checked": G.associativity_checked,
        "center": center(G).to_dict(G),
        "derived": derived_subgroup(G).to_dict(G),
        "abelian_subgroups": len(abelian),
        "maximal_abelian_subgroups": len(maximal),
        "maximal_abelian_orders": [M.order for M in maximal],
    }
    system.print_summary(args, G.name, [
        ("order", G.order),
        ("|Z(G)|", result["center"]["order"]),
        ("|[G,G]|", result["derived"]["order"]),
        ("abelian subgroups", len(abelian)),
        ("maximal abelian", len(maximal)),
    ])
    return system.new_report(args, result, spec)
