#ifndef LATGREEN_TESTS_CORPUS_HPP
#define LATGREEN_TESTS_CORPUS_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

// Reads tests/data/operators.txt: "nvars<TAB>expression" per line, '#' comments.
inline std::vector<std::pair<std::size_t, std::string>> load_operator_corpus(const std::string& path)
{
    std::vector<std::pair<std::size_t, std::string>> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#')
            continue;
        const auto tab = line.find('\t');
        out.emplace_back(std::stoul(line.substr(0, tab)), line.substr(tab + 1));
    }
    return out;
}

#endif // LATGREEN_TESTS_CORPUS_HPP
