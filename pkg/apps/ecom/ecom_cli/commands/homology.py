from ecom_cli.internals import system
from ecom_sdk.errors import DisconnectedComplexError
from ecom_sdk.homology.chains import homology, is_homology_wedge_of_circles
from ecom_sdk.pi1.cover import second_homotopy


def execute(args):
    K, G, spec, description = system.get_complex(args)
    if args.max_dim is not None and args.max_dim < 0:
        raise system.UsageError("--max-dim must be non-negative")

    report = homology(
        K,
        max_dim=args.max_dim,
        reduced=args.reduced,
        torsion=not args.betti_only,
        jobs=max(1, args.jobs),
    )
    result = {"complex": description, "stats": {"vertices": K.vertex_count, "facets": len(K.facets), "dimension": K.dimension}}
    result.update(report.to_dict())

    if not args.betti_only and not args.reduced and (args.max_dim is None or args.max_dim >= K.dimension):
        try:
            result["wedge_of_circles"] = is_homology_wedge_of_circles(K, report)
        except DisconnectedComplexError:
            result["wedge_of_circles"] = None

    if args.pi2:
        system.print_info(args, "Building the universal cover for pi_2")
        result["homotopy"] = second_homotopy(K, tree=args.tree, max_cosets=args.tc_limit)

    system.print_summary(args, description, [(f"H_{k}", str(h)) for k, h in enumerate(report.groups)] + [("chi", report.chi)])
    return system.new_report(args, result, spec)
