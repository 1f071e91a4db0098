#include <gtest/gtest.h>

#include <sstream>

#include "lexfact/consumers.hpp"
#include "lexfact/partition.hpp"

using namespace lexfact;

TEST(Consumers, CounterAndCollectorAgree) {
    const Instance inst(10, {2, 3});
    CountingConsumer counter;
    CollectingConsumer collector;
    run_sequential(inst, {}, counter);
    run_sequential(inst, {}, collector);
    EXPECT_EQ(counter.finalize(), 2u);
    EXPECT_EQ(collector.finalize(true), (std::vector<Candidate>{{5, 0}, {2, 2}}));
}

TEST(Consumers, CollectorSortsDescending) {
    CollectingConsumer collector;
    collector.accept(Candidate{2, 2});
    collector.accept(Candidate{0, 4});
    collector.accept(Candidate{5, 0});
    EXPECT_EQ(collector.finalize(false), (std::vector<Candidate>{{2, 2}, {0, 4}, {5, 0}}));
    EXPECT_EQ(collector.finalize(true), (std::vector<Candidate>{{5, 0}, {2, 2}, {0, 4}}));
}

TEST(Consumers, CollectorOnEmptySet) {
    CollectingConsumer collector;
    run_sequential(Instance(1, {2, 3}), {}, collector);
    EXPECT_TRUE(collector.finalize(true).empty());
}

TEST(Consumers, ExistsPredicate) {
    const Instance inst(10, {2, 3});
    ExistsConsumer long_one(min_length_at_least(5));
    run_sequential(inst, {}, long_one);
    EXPECT_TRUE(long_one.finalize());  // (5, 0)

    ExistsConsumer too_long(min_length_at_least(6));
    run_sequential(inst, {}, too_long);
    EXPECT_FALSE(too_long.finalize());

    ExistsConsumer short_one(max_length_at_most(4));
    run_sequential(inst, {}, short_one);
    EXPECT_TRUE(short_one.finalize());  // (2, 2)

    ExistsConsumer custom([](std::span<const Natural> a) { return a[1] == 3; });
    run_sequential(inst, {}, custom);
    EXPECT_FALSE(custom.finalize());
}

TEST(Consumers, WriterTextFormat) {
    std::ostringstream out;
    WritingConsumer writer(out, OutputFormat::text, 2);
    writer.accept(Candidate{2, 2});
    writer.accept(Candidate{10, 0});
    writer.finalize();
    EXPECT_EQ(out.str(), "2 2\n10 0\n");
}

TEST(Consumers, WriterCsvFormat) {
    std::ostringstream out;
    WritingConsumer writer(out, OutputFormat::csv, 3);
    writer.accept(Candidate{7, 1, 0});
    writer.finalize();
    EXPECT_EQ(out.str(), "a1,a2,a3\n7,1,0\n");

    std::ostringstream empty;
    WritingConsumer header_only(empty, OutputFormat::csv, 2);
    header_only.finalize();
    EXPECT_EQ(empty.str(), "a1,a2\n");
}

TEST(Consumers, WriterPropagatesSinkFailure) {
    std::ostringstream broken;
    broken.setstate(std::ios::badbit);
    WritingConsumer writer(broken, OutputFormat::text, 2);
    EXPECT_THROW(writer.accept(Candidate{2, 2}), SinkError);
    EXPECT_THROW(writer.finalize(), SinkError);
    EXPECT_THROW(WritingConsumer(broken, OutputFormat::csv, 2), SinkError);
}
