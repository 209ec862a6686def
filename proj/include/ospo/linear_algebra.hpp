#pragma once

#include <vector>

#include "ospo/tensor.hpp"

namespace ospo {

// exact rank of a family of tensors
int rank(const std::vector<TensorVector>& vectors);

// kernel of the linear map sending domain[i] to images[i]; images may have
// any common length, kernel vectors are combinations of the domain words
std::vector<TensorVector> kernel(const std::vector<Word>& domain, const std::vector<TensorVector>& images);

// whether v lies in the span of the family
bool in_span(const std::vector<TensorVector>& family, const TensorVector& v);

}  // namespace ospo
