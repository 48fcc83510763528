"""The chain ft <= N_lower <= Y <= Z on a few small graphs."""

from fortnull import bound_chain, complete, complete_multipartite, corona_k1, cycle, path, petersen

graphs = {
    "P5": path(5),
    "C6": cycle(6),
    "K5": complete(5),
    "K3,3,3": complete_multipartite(3, 3, 3),
    "C5 corona K1": corona_k1(cycle(5)),
    "Petersen": petersen(),
}
print(f"{'graph':14} ft  N_lower  Y  Z  proven")
for name, G in graphs.items():
    ch = bound_chain(G, time_limit=60)
    print(f"{name:14} {ch.ft:2}  {ch.N_lower:7}  {ch.Y}  {ch.Z}  {ch.Y_proven}")
