from ecom_cli.internals import system
from ecom_sdk.complexes.models import afcom_complex


def execute(args):
    spec = system.get_spec(args)
    G = system.get_group(args, spec)
    K = afcom_complex(G)
    stats = K.stats()
    system.print_info(args, f"AfCom({G.name}): {stats['vertices']} vertices, {stats['facet_count']} facets, dimension {stats['dimension']}")
    system.print_summary(args, f"AfCom({G.name})", [(key, value) for key, value in sorted(stats.items())])
    return system.new_report(args, {"group": G.name, "complex": K.to_dict(), "stats": stats}, spec)
