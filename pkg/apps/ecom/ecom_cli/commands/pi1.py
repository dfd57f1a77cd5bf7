from ecom_cli.internals import system
from ecom_sdk.pi1.abelian import abelian_invariants, torsion_certificate
from ecom_sdk.pi1.commutator import commutator_morphism
from ecom_sdk.pi1.cover import second_homotopy
from ecom_sdk.pi1.presentation import pi1_presentation
from ecom_sdk.pi1.tietze import tietze_simplify
from ecom_sdk.pi1.todd_coxeter import todd_coxeter
from ecom_sdk.settings import current_budget


def execute(args):
    K, G, spec, description = system.get_complex(args)
    P = pi1_presentation(K, base=args.base, tree=args.tree)
    result = {"complex": description, "raw": {"generators": P.generator_count, "relators": len(P.relators)}}

    if args.simplify:
        P = tietze_simplify(P)
        system.print_info(args, f"Simplified to {P.generator_count} generators and {len(P.relators)} relators")

    invariants = abelian_invariants(P)
    result["presentation"] = P.to_dict()
    result["abelian_invariants"] = invariants.to_dict()
    result["abelian_invariants_text"] = str(invariants)
    if not P.relators:
        result["free_rank"] = P.generator_count

    # an infinite abelianization means an infinite group; no enumeration can finish
    if invariants.rank:
        result["todd_coxeter"] = {"order": "infinite"}
    elif args.tc_limit is not None or args.simplify:
        limit = args.tc_limit if args.tc_limit is not None else current_budget().max_cosets
        result["todd_coxeter"] = todd_coxeter(P, max_cosets=limit).to_dict()

    if args.certify_torsion:
        certificate = torsion_certificate(P)
        result["torsion_certificate"] = certificate.to_dict() if certificate else None

    if G is not None and args.variant == 'afcom':
        result["commutator_morphism"] = commutator_morphism(G, K).to_dict(G)

    if args.pi2:
        result["homotopy"] = second_homotopy(K, tree=args.tree, max_cosets=args.tc_limit)

    system.print_summary(args, description, [
        ("generators", P.generator_count),
        ("relators", len(P.relators)),
        ("pi_1^ab", str(invariants)),
        ("order", result.get("todd_coxeter", {}).get("order", "-")),
    ])
    return system.new_report(args, result, spec)
