from cli.base import ReportCommand
from ktheory.modules import (
    Ring, closed_form_report, k_limit_description, k_of_filtration, k_of_quotient, rank_over_rg,
    rank_table, weyl_invariance_check,
)


class Command(ReportCommand):
    help = 'Ranks of K_G(F_2r) or K_T(F_2r) from the Thom-space recursion'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--ring', choices=[ring.value for ring in Ring], default=Ring.RG.value)
        parser.add_argument('--level', type=int, default=0, help='Filtration level r (default: 0)')
        parser.add_argument('--table', action='store_true', help='Include the rank table for 0..level')
        parser.add_argument('--limit', action='store_true', help='Include the description of K of the union')

    def report(self, options):
        ring = Ring(options['ring'])
        r = options['level']
        module = k_of_filtration(r, ring)
        closed_form = closed_form_report(r)
        result = {
            'ring': ring.value,
            'level': r,
            'even_rank': module.even_rank,
            'odd_rank': module.odd_rank,
            'filtration': module.to_dict(),
            'closed_form': closed_form,
            'weyl_invariant': weyl_invariance_check(k_of_filtration(r, Ring.RT), k_of_filtration(r, Ring.RG)),
            'rt_rank_over_rg': rank_over_rg(k_of_filtration(r, Ring.RT)),
        }
        if r >= 1:
            result['quotient'] = k_of_quotient(r, ring).to_dict()
        if closed_form['discrepant']:
            result['note'] = (
                f"recursion gives rank {closed_form['recursion_rank']}; "
                f"the closed form prod_(k=0..{r}) gives {closed_form['displayed_closed_form_rank']}"
            )
        if options['table']:
            result['table'] = rank_table(r, ring)
        if options['limit']:
            result['limit'] = k_limit_description(ring)
        return result
