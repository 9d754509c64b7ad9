"""Monte Carlo fault injection: what fraction of words survive?

Same seed gives the same report, whether run serially or across workers.
"""

from secdaec.campaign import CampaignConfig, run_campaign

for model in ("single", "adjacent-double", "random-double"):
    for mode in ("secded", "daec"):
        rep = run_campaign(CampaignConfig("14-8", mode, 20_000, model, seed=1))
        d = rep.as_dict()["counts"]
        print(f"{model:<16}{mode:<7} corrected {d['corrected']:>6}  detected {d['detected']:>6}"
              f"  silent {d['silent_miscorrection']:>5}  residual WER {rep.residual_word_error_rate:.4f}")

rep = run_campaign(CampaignConfig("24-16", "daec", 20_000, "bernoulli", p=0.01, seed=7), jobs=2)
print("\nbernoulli p=0.01 on (24, 16):", rep.as_dict()["counts"])
