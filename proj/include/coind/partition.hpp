#pragma once

#include <string>
#include <vector>

namespace coind {

// weakly decreasing positive parts
using Partition = std::vector<int>;

int size(const Partition& p);
// all partitions of n, reverse lexicographic: (n) first, (1^n) last
std::vector<Partition> partitions(int n);
Partition conjugate(const Partition& p);
bool is_partition(const Partition& p);
std::string to_string(const Partition& p);  // "(2,1)", "()" for the empty partition
Partition parse_partition(const std::string& s);
// number of standard tableaux, by the hook length formula
long long hook_dimension(const Partition& p);

}  // namespace coind
