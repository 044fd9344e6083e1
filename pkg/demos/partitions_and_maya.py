"""
Partitions and Maya diagrams
============================

Partitions of n label every basis used in the package.  A partition
lambda also names a strictly increasing sequence l_j = j - lambda_j which
agrees with l_j = j from some point on (a Maya diagram).
"""

from bfcorr import MayaIndex, partition_to_maya, partitions_of, z_mu

# the partitions of 4, heaviest first part first
for lam in partitions_of(4):
    print(lam, "->", partition_to_maya(lam))

# the count grows quickly: 1, 1, 2, 3, 5, 7, 11, 15, 22
print([len(partitions_of(n)) for n in range(9)])

# z_mu = prod k_j! j^k_j, the size of the centralizer of a permutation of cycle type mu
for mu in partitions_of(4):
    print(mu, z_mu(mu))

# a Maya diagram may be given by its prefix; entries equal to the tail are dropped
l = MayaIndex.from_prefix([-2, 0, 3])
print(l, l.partition, l.values(6))
