// voxkit/sentiment_lexicon_data.hpp  --  bundled default sentiment lexicon
//
// Copyright 2026  Voxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VOXKIT_SENTIMENT_LEXICON_DATA_HPP_
#define VOXKIT_SENTIMENT_LEXICON_DATA_HPP_

namespace voxkit {
namespace detail {

// word<TAB>polarity<TAB>subjectivity[<TAB>intensity], one entry per line
inline const char* const kDefaultSentimentLexicon = R"lexicon(
abandon	-0.5	0.55
abandoned	-0.5	0.55
abandoning	-0.5	0.55
abandons	-0.5	0.55
abominable	-0.9	0.85
abominably	-0.9	0.85
absolutely	0	0	1.5
abuse	-0.5	0.55
abused	-0.5	0.55
abuses	-0.5	0.55
abusing	-0.5	0.55
abysmal	-0.9	0.85
abysmally	-0.9	0.85
accident	-0.55	0.6
accidents	-0.55	0.6
accomplish	0.5	0.55
accomplished	0.5	0.55
accomplishes	0.5	0.55
accomplishing	0.5	0.55
accuse	-0.5	0.55
accused	-0.5	0.55
accuses	-0.5	0.55
accusing	-0.5	0.55
achieve	0.5	0.55
achieved	0.5	0.55
achievement	0.55	0.6
achievements	0.55	0.6
achiever	0.55	0.65
achievers	0.55	0.65
achieves	0.5	0.55
achieving	0.5	0.55
adequate	0.3	0.45
adequately	0.3	0.45
adequateness	0.27	0.45
admirable	0.6	0.65
admirably	0.6	0.65
admiration	0.55	0.6
admirations	0.55	0.6
admire	0.5	0.55
admired	0.5	0.55
admires	0.5	0.55
admiring	0.5	0.55
adore	0.5	0.55
adored	0.5	0.55
adores	0.5	0.55
adoring	0.5	0.55
adorn	0.5	0.55
adorned	0.5	0.55
adorning	0.5	0.55
adorns	0.5	0.55
advantage	0.55	0.6
advantages	0.55	0.6
afflict	-0.5	0.55
afflicted	-0.5	0.55
afflicting	-0.5	0.55
afflicts	-0.5	0.55
affordable	0.5	0.5
aggravate	-0.5	0.55
aggravated	-0.5	0.55
aggravates	-0.5	0.55
aggravating	-0.5	0.55
aggress	-0.5	0.55
aggressed	-0.5	0.55
aggresses	-0.5	0.55
aggressing	-0.5	0.55
aggressive	-0.6	0.65
aggressively	-0.6	0.65
agonies	-0.55	0.6
agony	-0.55	0.6
agreeable	0.6	0.65
agreeably	0.6	0.65
alarm	-0.5	0.55
alarmed	-0.5	0.55
alarming	-0.5	0.55
alarms	-0.5	0.55
alienate	-0.5	0.55
alienated	-0.5	0.55
alienates	-0.5	0.55
alienating	-0.5	0.55
allies	0.55	0.65
ally	0.55	0.65
almost	0	0	0.9
amateur	-0.55	0.65
amateurish	-0.65	0.7
amateurs	-0.55	0.65
amaze	0.5	0.55
amazed	0.5	0.55
amazes	0.5	0.55
amazing	0.9	0.85
amazingly	0.9	0.85
amuse	0.5	0.55
amused	0.5	0.55
amuses	0.5	0.55
amusing	0.5	0.55
anger	-0.5	0.55
angered	-0.5	0.55
angering	-0.5	0.55
angers	-0.5	0.55
angrier	-0.5	0.6
angriest	-0.65	0.6
angrily	-0.6	0.65
angriness	-0.54	0.65
angry	-0.6	0.65
anguish	-0.55	0.6
anguishes	-0.55	0.6
annoy	-0.5	0.55
annoyed	-0.5	0.55
annoying	-0.6	0.65
annoyingly	-0.6	0.65
annoys	-0.5	0.55
antagonize	-0.5	0.55
antagonized	-0.5	0.55
antagonizes	-0.5	0.55
antagonizing	-0.5	0.55
anxious	-0.6	0.65
anxiously	-0.6	0.65
appalling	-0.9	0.85
appallingly	-0.9	0.85
appealing	0.6	0.65
appealingly	0.6	0.65
applaud	0.5	0.55
applauded	0.5	0.55
applauding	0.5	0.55
applauds	0.5	0.55
appreciate	0.5	0.55
appreciated	0.5	0.55
appreciates	0.5	0.55
appreciating	0.5	0.55
approve	0.5	0.55
approved	0.5	0.55
approves	0.5	0.55
approving	0.5	0.55
argue	-0.5	0.55
argued	-0.5	0.55
argues	-0.5	0.55
arguing	-0.5	0.55
arrogant	-0.6	0.65
arrogantly	-0.6	0.65
ashamed	-0.6	0.65
ashamedly	-0.6	0.65
assist	0.5	0.55
assisted	0.5	0.55
assisting	0.5	0.55
assists	0.5	0.55
astonishing	0.9	0.85
astonishingly	0.9	0.85
astounding	0.9	0.85
astoundingly	0.9	0.85
atrocious	-0.9	0.85
atrociously	-0.9	0.85
attack	-0.5	0.55
attacked	-0.5	0.55
attacking	-0.5	0.55
attacks	-0.5	0.55
attract	0.5	0.55
attracted	0.5	0.55
attracting	0.5	0.55
attractive	0.6	0.65
attractively	0.6	0.65
attracts	0.5	0.55
authentic	0.5	0.5
authentically	0.5	0.5
average	-0.3	0.45
averageness	-0.27	0.45
awesome	0.9	0.85
awesomely	0.9	0.85
awesomeness	0.81	0.85
awful	-0.9	0.85
awfully	-0.9	0.85
awfulness	-0.81	0.85
awkward	-0.3	0.45
awkwardly	-0.3	0.45
awkwardness	-0.27	0.45
bad	-0.7	0.65
badly	-0.6	0.6
barely	0	0	0.6
bargain	0.5	0.5
bargains	0.5	0.5
beautiful	0.6	0.65
beautifully	0.6	0.65
beautifulness	0.54	0.65
believable	0.4	0.5
belittle	-0.5	0.55
belittled	-0.5	0.55
belittles	-0.5	0.55
belittling	-0.5	0.55
benefactor	0.55	0.65
benefactors	0.55	0.65
beneficial	0.6	0.65
beneficially	0.6	0.65
benefit	0.5	0.55
benefited	0.5	0.55
benefiting	0.5	0.55
benefits	0.5	0.55
berate	-0.5	0.55
berated	-0.5	0.55
berates	-0.5	0.55
berating	-0.5	0.55
best	1	0.8
bestseller	0.65	0.7
betray	-0.5	0.55
betrayal	-0.55	0.6
betrayals	-0.55	0.6
betrayed	-0.5	0.55
betraying	-0.5	0.55
betrays	-0.5	0.55
better	0.5	0.6
bitter	-0.6	0.65
bitterly	-0.6	0.65
bitterness	-0.54	0.65
blah	-0.3	0.7
blame	-0.5	0.55
blamed	-0.5	0.55
blames	-0.5	0.55
blaming	-0.5	0.55
bland	-0.6	0.65
blandly	-0.6	0.65
blandness	-0.54	0.65
bleak	-0.6	0.65
bleaker	-0.5	0.6
bleakest	-0.65	0.6
bleakly	-0.6	0.65
bleakness	-0.54	0.65
bless	0.5	0.55
blessed	0.5	0.55
blesses	0.5	0.55
blessing	0.5	0.55
blessings	0.55	0.6
bliss	0.55	0.6
blisses	0.55	0.6
blockbuster	0.65	0.7
blunder	-0.5	0.55
blundered	-0.5	0.55
blundering	-0.5	0.55
blunders	-0.5	0.55
bogus	-0.6	0.65
bold	0.5	0.6
bolder	0.5	0.6
boldest	0.65	0.6
bomb	-0.65	0.7
bonus	0.55	0.6
bonuses	0.55	0.6
bore	-0.5	0.55
bored	-0.5	0.55
borefest	-0.65	0.7
bores	-0.5	0.55
boring	-0.6	0.65
boringly	-0.6	0.65
botch	-0.5	0.55
botched	-0.5	0.55
botches	-0.5	0.55
botching	-0.5	0.55
bother	-0.5	0.55
bothered	-0.5	0.55
bothering	-0.5	0.55
bothers	-0.5	0.55
brave	0.5	0.6
braver	0.5	0.6
bravest	0.65	0.6
bravo	0.8	0.9
breakthrough	0.55	0.6
breakthroughs	0.55	0.6
breathtaking	0.9	0.85
breathtakingly	0.9	0.85
bright	0.6	0.65
brighten	0.5	0.55
brightened	0.5	0.55
brightening	0.5	0.55
brightens	0.5	0.55
brighter	0.5	0.6
brightest	0.65	0.6
brightly	0.6	0.65
brightness	0.54	0.65
brilliant	0.9	0.85
brilliantly	0.9	0.85
brittle	-0.3	0.4
broken	-0.6	0.65
brutal	-0.6	0.65
brutally	-0.6	0.65
brute	-0.55	0.65
brutes	-0.55	0.65
buggy	-0.5	0.5
bullies	-0.55	0.65
bully	-0.55	0.65
burden	-0.55	0.6
burdens	-0.55	0.6
calamities	-0.55	0.6
calamity	-0.55	0.6
calm	0.3	0.45
calmer	0.5	0.6
calmest	0.65	0.6
calmly	0.3	0.45
calmness	0.27	0.45
cancel	-0.5	0.55
canceled	-0.5	0.55
canceling	-0.5	0.55
cancels	-0.5	0.55
capable	0.6	0.65
capably	0.6	0.65
captivate	0.5	0.55
captivated	0.5	0.55
captivates	0.5	0.55
captivating	0.5	0.55
careful	0.4	0.6
carefully	0.4	0.6
carefulness	0.36	0.6
careless	-0.6	0.65
carelessly	-0.6	0.65
carelessness	-0.54	0.65
casual	0.3	0.45
casually	0.3	0.45
catastrophe	-0.55	0.6
catastrophes	-0.55	0.6
catastrophic	-0.9	0.85
catastrophically	-0.9	0.85
celebrate	0.5	0.55
celebrated	0.5	0.55
celebrates	0.5	0.55
celebrating	0.5	0.55
champion	0.55	0.65
champions	0.55	0.65
chaos	-0.55	0.6
chaoses	-0.55	0.6
chaotic	-0.6	0.65
chaotically	-0.6	0.65
charm	0.5	0.55
charmed	0.5	0.55
charming	0.6	0.65
charmingly	0.6	0.65
charms	0.5	0.55
cheap	-0.6	0.65
cheaper	0.5	0.6
cheapest	0.65	0.6
cheaply	-0.6	0.65
cheapness	-0.54	0.65
cheat	-0.5	0.55
cheated	-0.5	0.55
cheater	-0.55	0.65
cheaters	-0.55	0.65
cheating	-0.5	0.55
cheats	-0.5	0.55
cheer	0.5	0.55
cheered	0.5	0.55
cheerful	0.6	0.65
cheerfully	0.6	0.65
cheerfulness	0.54	0.65
cheering	0.5	0.55
cheerless	-0.4	0.6
cheerlessly	-0.4	0.6
cheerlessness	-0.36	0.6
cheers	0.5	0.55
cheesy	-0.65	0.7
cinematic	0.65	0.7
clarified	0.5	0.55
clarifies	0.5	0.55
clarify	0.5	0.55
clarifying	0.5	0.55
classic	0.65	0.7
classily	0.6	0.65
classiness	0.54	0.65
classy	0.6	0.65
clean	0.6	0.65
cleaner	0.5	0.6
cleanest	0.65	0.6
cleanly	0.6	0.65
cleanness	0.54	0.65
clever	0.6	0.65
cleverly	0.6	0.65
cleverness	0.54	0.65
cleverrer	0.5	0.6
cleverrest	0.65	0.6
cliched	-0.65	0.7
cloudiness	-0.27	0.45
cloudy	-0.3	0.45
clown	-0.55	0.65
clowns	-0.55	0.65
clumsily	-0.6	0.65
clumsiness	-0.54	0.65
clumsy	-0.6	0.65
clunky	-0.4	0.5
cold	-0.6	0.65
colder	-0.5	0.6
coldest	-0.65	0.6
coldly	-0.6	0.65
coldness	-0.54	0.65
collaborate	0.5	0.55
collaborated	0.5	0.55
collaborates	0.5	0.55
collaborating	0.5	0.55
collapse	-0.5	0.55
collapsed	-0.5	0.55
collapses	-0.5	0.55
collapsing	-0.5	0.55
colorful	0.4	0.6
colorfully	0.4	0.6
colorfulness	0.36	0.6
colorless	-0.3	0.6
colorlessly	-0.3	0.6
colorlessness	-0.27	0.6
comfort	0.5	0.55
comfortable	0.6	0.65
comfortably	0.6	0.65
comforted	0.5	0.55
comforting	0.5	0.55
comforts	0.5	0.55
commend	0.5	0.55
commendable	0.6	0.65
commendably	0.6	0.65
commended	0.5	0.55
commending	0.5	0.55
commends	0.5	0.55
common	0.3	0.45
commonly	0.3	0.45
commonness	0.27	0.45
compelling	0.6	0.65
compellingly	0.6	0.65
complain	-0.5	0.55
complained	-0.5	0.55
complaining	-0.5	0.55
complains	-0.5	0.55
complaint	-0.55	0.6
complaints	-0.55	0.6
completely	0	0	1.4
complicate	-0.5	0.55
complicated	-0.5	0.55
complicates	-0.5	0.55
complicating	-0.5	0.55
compliment	0.5	0.55
complimented	0.5	0.55
complimenting	0.5	0.55
compliments	0.5	0.55
condemn	-0.5	0.55
condemned	-0.5	0.55
condemning	-0.5	0.55
condemns	-0.5	0.55
confident	0.6	0.65
confidently	0.6	0.65
confuse	-0.5	0.55
confused	-0.5	0.55
confuses	-0.5	0.55
confusing	-0.6	0.65
confusingly	-0.6	0.65
congrats	0.7	0.8
congratulate	0.5	0.55
congratulated	0.5	0.55
congratulates	0.5	0.55
congratulating	0.5	0.55
congratulations	0.7	0.8
considerate	0.6	0.65
considerately	0.6	0.65
considerateness	0.54	0.65
contaminate	-0.5	0.55
contaminated	-0.5	0.55
contaminates	-0.5	0.55
contaminating	-0.5	0.55
contrived	-0.65	0.7
convenient	0.3	0.45
conveniently	0.3	0.45
convoluted	-0.65	0.7
cool	0.5	0.6
cooler	0.5	0.6
coolest	0.65	0.6
corny	-0.65	0.7
corrupt	-0.6	0.65
corrupted	-0.5	0.55
corrupting	-0.5	0.55
corruption	-0.55	0.6
corruptions	-0.55	0.6
corruptly	-0.6	0.65
corruptness	-0.54	0.65
corrupts	-0.5	0.55
costliness	-0.54	0.65
costly	-0.6	0.65
courage	0.55	0.6
courageous	0.6	0.65
courageously	0.6	0.65
courages	0.55	0.6
coward	-0.55	0.65
cowardliness	-0.54	0.65
cowardly	-0.6	0.65
cowards	-0.55	0.65
coziness	0.27	0.45
cozy	0.3	0.45
cramped	-0.6	0.65
crankily	-0.6	0.65
crankiness	-0.54	0.65
cranky	-0.6	0.65
crap	-0.7	0.8
crappy	-0.7	0.8
crash	-0.5	0.55
crashed	-0.5	0.55
crashes	-0.5	0.55
crashing	-0.5	0.55
creative	0.6	0.65
creatively	0.6	0.65
creepier	-0.5	0.6
creepiest	-0.65	0.6
creepily	-0.6	0.65
creepiness	-0.54	0.65
creepy	-0.6	0.65
cried	-0.5	0.55
cries	-0.5	0.55
crime	-0.55	0.6
crimes	-0.55	0.6
criminal	-0.55	0.65
criminals	-0.55	0.65
cringeworthy	-0.65	0.7
cripple	-0.5	0.55
crippled	-0.5	0.55
cripples	-0.5	0.55
crippling	-0.5	0.55
crisis	-0.55	0.6
crisises	-0.55	0.6
crisp	0.4	0.5
crisply	0.4	0.5
criticize	-0.5	0.55
criticized	-0.5	0.55
criticizes	-0.5	0.55
criticizing	-0.5	0.55
crook	-0.55	0.65
crooked	-0.6	0.65
crookedly	-0.6	0.65
crooks	-0.55	0.65
crowded	-0.3	0.45
crowdpleaser	0.65	0.7
crude	-0.6	0.65
crudely	-0.6	0.65
crudeness	-0.54	0.65
cruel	-0.6	0.65
crueler	-0.5	0.6
cruelest	-0.65	0.6
cruelly	-0.6	0.65
cruelness	-0.54	0.65
cruelties	-0.55	0.6
cruelty	-0.55	0.6
cry	-0.5	0.55
crying	-0.5	0.55
curious	0.3	0.45
curiously	0.3	0.45
cynical	-0.6	0.65
cynically	-0.6	0.65
damage	-0.5	0.55
damaged	-0.6	0.65
damages	-0.5	0.55
damaging	-0.5	0.55
damn	-0.4	0.7
damnable	-0.9	0.85
damnably	-0.9	0.85
damned	-0.5	0.7
danger	-0.55	0.6
dangerous	-0.6	0.65
dangerously	-0.6	0.65
dangers	-0.55	0.6
dark	-0.6	0.65
darker	-0.5	0.6
darkest	-0.65	0.6
darkly	-0.6	0.65
darkness	-0.54	0.65
darling	0.55	0.65
darlings	0.55	0.65
dazzle	0.5	0.55
dazzled	0.5	0.55
dazzles	0.5	0.55
dazzling	0.9	0.85
dazzlingly	0.9	0.85
debase	-0.5	0.55
debased	-0.5	0.55
debases	-0.5	0.55
debasing	-0.5	0.55
deceit	-0.55	0.6
deceitful	-0.6	0.65
deceitfully	-0.6	0.65
deceitfulness	-0.54	0.65
deceits	-0.55	0.6
deceive	-0.5	0.55
deceived	-0.5	0.55
deceives	-0.5	0.55
deceiving	-0.5	0.55
decent	0.3	0.45
decently	0.3	0.45
decidedly	0	0	1.25
decline	-0.5	0.55
declined	-0.5	0.55
declines	-0.5	0.55
declining	-0.5	0.55
dedicate	0.5	0.55
dedicated	0.5	0.55
dedicates	0.5	0.55
dedicating	0.5	0.55
deeply	0	0	1.3
defame	-0.5	0.55
defamed	-0.5	0.55
defames	-0.5	0.55
defaming	-0.5	0.55
defeat	-0.55	0.6
defeats	-0.55	0.6
defective	-0.6	0.65
defectively	-0.6	0.65
deficiencies	-0.55	0.6
deficiency	-0.55	0.6
deficient	-0.6	0.65
deficiently	-0.6	0.65
degrade	-0.5	0.55
degraded	-0.5	0.55
degrades	-0.5	0.55
degrading	-0.5	0.55
dejected	-0.6	0.65
dejectedly	-0.6	0.65
delicious	0.6	0.65
deliciously	0.6	0.65
delight	0.5	0.55
delighted	0.5	0.55
delightful	0.9	0.85
delightfully	0.9	0.85
delightfulness	0.81	0.85
delighting	0.5	0.55
delights	0.5	0.55
demean	-0.5	0.55
demeaned	-0.5	0.55
demeaning	-0.5	0.55
demeans	-0.5	0.55
demolish	-0.5	0.55
demolished	-0.5	0.55
demolishes	-0.5	0.55
demolishing	-0.5	0.55
denied	-0.5	0.55
denies	-0.5	0.55
denounce	-0.5	0.55
denounced	-0.5	0.55
denounces	-0.5	0.55
denouncing	-0.5	0.55
deny	-0.5	0.55
denying	-0.5	0.55
dependable	0.6	0.65
dependably	0.6	0.65
deplorable	-0.9	0.85
deplorably	-0.9	0.85
deplore	-0.5	0.55
deplored	-0.5	0.55
deplores	-0.5	0.55
deploring	-0.5	0.55
depressing	-0.6	0.65
depressingly	-0.6	0.65
deprive	-0.5	0.55
deprived	-0.5	0.55
deprives	-0.5	0.55
depriving	-0.5	0.55
derail	-0.5	0.55
derailed	-0.5	0.55
derailing	-0.5	0.55
derails	-0.5	0.55
derivative	-0.65	0.7
desirable	0.6	0.65
desirably	0.6	0.65
despair	-0.55	0.6
despairs	-0.55	0.6
desperate	-0.6	0.65
desperately	-0.6	0.65
desperateness	-0.54	0.65
despicable	-0.9	0.85
despicably	-0.9	0.85
despise	-0.5	0.55
despised	-0.5	0.55
despises	-0.5	0.55
despising	-0.5	0.55
destroy	-0.5	0.55
destroyed	-0.5	0.55
destroying	-0.5	0.55
destroys	-0.5	0.55
destructive	-0.6	0.65
destructively	-0.6	0.65
deteriorate	-0.5	0.55
deteriorated	-0.5	0.55
deteriorates	-0.5	0.55
deteriorating	-0.5	0.55
detestable	-0.9	0.85
detestably	-0.9	0.85
devastate	-0.5	0.55
devastated	-0.5	0.55
devastates	-0.5	0.55
devastating	-0.5	0.55
devotion	0.55	0.6
devotions	0.55	0.6
dignified	0.5	0.55
dignifies	0.5	0.55
dignify	0.5	0.55
dignifying	0.5	0.55
dignities	0.55	0.6
dignity	0.55	0.6
diminish	-0.5	0.55
diminished	-0.5	0.55
diminishes	-0.5	0.55
diminishing	-0.5	0.55
dirtier	-0.5	0.6
dirtiest	-0.65	0.6
dirtily	-0.6	0.65
dirtiness	-0.54	0.65
dirty	-0.6	0.65
disable	-0.5	0.55
disabled	-0.5	0.55
disables	-0.5	0.55
disabling	-0.5	0.55
disadvantage	-0.55	0.6
disadvantages	-0.55	0.6
disappear	-0.5	0.55
disappeared	-0.5	0.55
disappearing	-0.5	0.55
disappears	-0.5	0.55
disappoint	-0.5	0.55
disappointed	-0.5	0.55
disappointing	-0.5	0.55
disappointment	-0.55	0.6
disappointments	-0.55	0.6
disappoints	-0.5	0.55
disaster	-0.55	0.6
disasterpiece	-0.65	0.7
disasters	-0.55	0.6
disastrous	-0.9	0.85
disastrously	-0.9	0.85
discourage	-0.5	0.55
discouraged	-0.5	0.55
discourages	-0.5	0.55
discouraging	-0.5	0.55
discredit	-0.5	0.55
discredited	-0.5	0.55
discrediting	-0.5	0.55
discredits	-0.5	0.55
disgrace	-0.55	0.6
disgraceful	-0.9	0.85
disgracefully	-0.9	0.85
disgracefulness	-0.81	0.85
disgraces	-0.55	0.6
disgust	-0.5	0.55
disgusted	-0.5	0.55
disgusting	-0.9	0.85
disgustingly	-0.9	0.85
disgusts	-0.5	0.55
dishearten	-0.5	0.55
disheartened	-0.5	0.55
disheartening	-0.5	0.55
disheartens	-0.5	0.55
dishonest	-0.6	0.65
dishonestly	-0.6	0.65
dishonestness	-0.54	0.65
dishonor	-0.55	0.6
dishonors	-0.55	0.6
disjointed	-0.4	0.5
dislike	-0.5	0.55
disliked	-0.5	0.55
dislikes	-0.5	0.55
disliking	-0.5	0.55
dismal	-0.6	0.65
dismally	-0.6	0.65
dismantle	-0.5	0.55
dismantled	-0.5	0.55
dismantles	-0.5	0.55
dismantling	-0.5	0.55
dismiss	-0.5	0.55
dismissed	-0.5	0.55
dismisses	-0.5	0.55
dismissing	-0.5	0.55
disorder	-0.55	0.6
disorderliness	-0.54	0.65
disorderly	-0.6	0.65
disorders	-0.55	0.6
disparage	-0.5	0.55
disparaged	-0.5	0.55
disparages	-0.5	0.55
disparaging	-0.5	0.55
displease	-0.5	0.55
displeased	-0.5	0.55
displeases	-0.5	0.55
displeasing	-0.5	0.55
disrupt	-0.5	0.55
disrupted	-0.5	0.55
disrupting	-0.5	0.55
disrupts	-0.5	0.55
distort	-0.5	0.55
distorted	-0.5	0.55
distorting	-0.5	0.55
distorts	-0.5	0.55
distress	-0.5	0.55
distressed	-0.5	0.55
distresses	-0.5	0.55
distressing	-0.5	0.55
disturb	-0.5	0.55
disturbed	-0.5	0.55
disturbing	-0.6	0.65
disturbingly	-0.6	0.65
disturbs	-0.5	0.55
dodge	-0.5	0.55
dodged	-0.5	0.55
dodges	-0.5	0.55
dodging	-0.5	0.55
doubt	-0.5	0.55
doubted	-0.5	0.55
doubtful	-0.6	0.65
doubtfully	-0.6	0.65
doubtfulness	-0.54	0.65
doubting	-0.5	0.55
doubts	-0.5	0.55
drain	-0.5	0.55
drained	-0.5	0.55
draining	-0.5	0.55
drains	-0.5	0.55
dread	-0.5	0.55
dreaded	-0.5	0.55
dreadful	-0.9	0.85
dreadfully	-0.9	0.85
dreadfulness	-0.81	0.85
dreading	-0.5	0.55
dreads	-0.5	0.55
drearily	-0.6	0.65
dreariness	-0.54	0.65
dreary	-0.6	0.65
dreck	-0.7	0.7
drivel	-0.6	0.7
dud	-0.65	0.7
dull	-0.6	0.65
duller	-0.5	0.6
dullest	-0.65	0.6
dullness	-0.54	0.65
dully	-0.6	0.65
dump	-0.5	0.55
dumped	-0.5	0.55
dumping	-0.5	0.55
dumps	-0.5	0.55
dynamic	0.6	0.65
dynamically	0.6	0.65
dysfunctional	-0.6	0.65
dysfunctionally	-0.6	0.65
eager	0.6	0.65
eagerly	0.6	0.65
eagerness	0.54	0.65
educate	0.5	0.55
educated	0.5	0.55
educates	0.5	0.55
educating	0.5	0.55
effective	0.6	0.65
effectively	0.6	0.65
efficient	0.6	0.65
efficiently	0.6	0.65
effortless	0.6	0.6
effortlessly	0.6	0.6
elegant	0.6	0.65
elegantly	0.6	0.65
elevate	0.5	0.55
elevated	0.5	0.55
elevates	0.5	0.55
elevating	0.5	0.55
embarrassing	-0.6	0.65
embarrassingly	-0.6	0.65
embrace	0.5	0.55
embraced	0.5	0.55
embraces	0.5	0.55
embracing	0.5	0.55
empower	0.5	0.55
empowered	0.5	0.55
empowering	0.5	0.55
empowers	0.5	0.55
enchant	0.5	0.55
enchanted	0.5	0.55
enchanting	0.5	0.55
enchants	0.5	0.55
encore	0.6	0.7
encourage	0.5	0.55
encouraged	0.5	0.55
encourages	0.5	0.55
encouraging	0.5	0.55
endanger	-0.5	0.55
endangered	-0.5	0.55
endangering	-0.5	0.55
endangers	-0.5	0.55
endorse	0.5	0.55
endorsed	0.5	0.55
endorses	0.5	0.55
endorsing	0.5	0.55
enemies	-0.55	0.65
enemy	-0.55	0.65
energize	0.5	0.55
energized	0.5	0.55
energizes	0.5	0.55
energizing	0.5	0.55
engage	0.5	0.55
engaged	0.5	0.55
engages	0.5	0.55
engaging	0.5	0.55
engrossing	0.65	0.7
enhance	0.5	0.55
enhanced	0.5	0.55
enhances	0.5	0.55
enhancing	0.5	0.55
enjoy	0.5	0.55
enjoyable	0.6	0.65
enjoyably	0.6	0.65
enjoyed	0.5	0.55
enjoying	0.5	0.55
enjoys	0.5	0.55
enlighten	0.5	0.55
enlightened	0.5	0.55
enlightening	0.5	0.55
enlightens	0.5	0.55
enliven	0.5	0.55
enlivened	0.5	0.55
enlivening	0.5	0.55
enlivens	0.5	0.55
enormously	0	0	1.45
enrich	0.5	0.55
enriched	0.5	0.55
enriches	0.5	0.55
enriching	0.5	0.55
entertain	0.5	0.55
entertained	0.5	0.55
entertaining	0.6	0.65
entertainingly	0.6	0.65
entertains	0.5	0.55
enthusiastic	0.6	0.65
enthusiastically	0.6	0.65
entice	0.5	0.55
enticed	0.5	0.55
entices	0.5	0.55
enticing	0.5	0.55
envious	-0.6	0.65
enviously	-0.6	0.65
erode	-0.5	0.55
eroded	-0.5	0.55
erodes	-0.5	0.55
eroding	-0.5	0.55
erratic	-0.6	0.65
erratically	-0.6	0.65
especially	0	0	1.3
eventful	0.3	0.45
eventfully	0.3	0.45
evergreen	0.65	0.7
evil	-0.9	0.85
evilly	-0.9	0.85
evilness	-0.81	0.85
eww	-0.6	0.9
exaggerate	-0.5	0.55
exaggerated	-0.5	0.55
exaggerates	-0.5	0.55
exaggerating	-0.5	0.55
exasperating	-0.6	0.7
exceedingly	0	0	1.5
excel	0.5	0.55
exceled	0.5	0.55
exceling	0.5	0.55
excellence	0.55	0.6
excellences	0.55	0.6
excellent	0.9	0.85
excellently	0.9	0.85
excels	0.5	0.55
exceptional	0.9	0.85
exceptionally	0.9	0.85
excessively	0	0	1.3
excite	0.5	0.55
excited	0.5	0.55
excites	0.5	0.55
exciting	0.6	0.65
excitingly	0.6	0.65
execrable	-0.9	0.85
execrably	-0.9	0.85
exhilarate	0.5	0.55
exhilarated	0.5	0.55
exhilarates	0.5	0.55
exhilarating	0.5	0.55
expert	0.55	0.65
experts	0.55	0.65
exploit	-0.5	0.55
exploited	-0.5	0.55
exploiting	-0.5	0.55
exploits	-0.5	0.55
exquisite	0.9	0.85
exquisitely	0.9	0.85
exquisiteness	0.81	0.85
extraordinarily	0.9	0.85
extraordinariness	0.81	0.85
extraordinary	0.9	0.85
extremely	0	0	1.6
eyesore	-0.65	0.7
fabulous	0.9	0.85
fabulously	0.9	0.85
fail	-0.5	0.55
failed	-0.5	0.55
failing	-0.5	0.55
fails	-0.5	0.55
failure	-0.55	0.6
failures	-0.55	0.6
fair	0.3	0.45
fairer	0.5	0.6
fairest	0.65	0.6
fairly	0.3	0.45
fairness	0.27	0.45
faithful	0.5	0.6
faithfully	0.5	0.6
faithfulness	0.45	0.6
faithless	-0.4	0.6
faithlessly	-0.4	0.6
faithlessness	-0.36	0.6
familiar	0.3	0.45
familiarly	0.3	0.45
familiarness	0.27	0.45
fantastic	0.9	0.85
fantastically	0.9	0.85
fascinate	0.5	0.55
fascinated	0.5	0.55
fascinates	0.5	0.55
fascinating	0.5	0.55
fast	0.5	0.6
faster	0.5	0.6
fastest	0.65	0.6
faultily	-0.6	0.65
faultiness	-0.54	0.65
faulty	-0.6	0.65
favor	0.5	0.55
favorable	0.6	0.65
favorably	0.6	0.65
favored	0.5	0.55
favoring	0.5	0.55
favorite	0.7	0.8
favors	0.5	0.55
favourite	0.7	0.8
favourites	0.7	0.8
fear	-0.55	0.6
fearful	-0.6	0.65
fearfully	-0.6	0.65
fearfulness	-0.54	0.65
fearless	0.6	0.65
fearlessly	0.6	0.65
fearlessness	0.54	0.65
fears	-0.55	0.6
feasible	0.3	0.45
feasibly	0.3	0.45
feeble	-0.6	0.65
feebleness	-0.54	0.65
feebly	-0.6	0.65
feelgood	0.65	0.7
fertile	0.6	0.65
fertileness	0.54	0.65
festive	0.6	0.65
filthily	-0.6	0.65
filthiness	-0.54	0.65
filthy	-0.6	0.65
fine	0.6	0.65
finely	0.6	0.65
fineness	0.54	0.65
finer	0.5	0.6
finest	0.65	0.6
flatter	0.5	0.55
flattered	0.5	0.55
flattering	0.5	0.55
flatters	0.5	0.55
flaw	-0.55	0.6
flawed	-0.6	0.65
flawless	0.9	0.85
flawlessly	0.9	0.85
flawlessness	0.81	0.85
flaws	-0.55	0.6
flexible	0.3	0.45
flexibly	0.3	0.45
flimsy	-0.4	0.5
flop	-0.65	0.7
flourish	0.5	0.55
flourished	0.5	0.55
flourishes	0.5	0.55
flourishing	0.5	0.55
fool	-0.55	0.65
foolish	-0.6	0.65
foolishly	-0.6	0.65
foolishness	-0.54	0.65
fools	-0.55	0.65
forgave	0.5	0.55
forgettable	-0.6	0.65
forgettably	-0.6	0.65
forgive	0.5	0.55
forgiven	0.5	0.55
forgives	0.5	0.55
forgiving	0.5	0.55
forgotten	-0.3	0.45
forgottenness	-0.27	0.45
formulaic	-0.65	0.7
fortified	0.5	0.55
fortifies	0.5	0.55
fortify	0.5	0.55
fortifying	0.5	0.55
fortune	0.55	0.6
fortunes	0.55	0.6
fragile	-0.6	0.65
fragilely	-0.6	0.65
fragileness	-0.54	0.65
fraud	-0.55	0.6
frauds	-0.55	0.6
fraudster	-0.55	0.65
fraudsters	-0.55	0.65
fraudulent	-0.6	0.65
fraudulently	-0.6	0.65
freedom	0.55	0.6
freedoms	0.55	0.6
fresh	0.3	0.45
fresher	0.5	0.6
freshest	0.65	0.6
freshness	0.27	0.45
friend	0.55	0.65
friendliness	0.54	0.65
friendly	0.6	0.65
friends	0.55	0.65
friendship	0.55	0.6
friendships	0.55	0.6
frighten	-0.5	0.55
frightened	-0.5	0.55
frightening	-0.6	0.65
frighteningly	-0.6	0.65
frightens	-0.5	0.55
fruitful	0.6	0.65
fruitfully	0.6	0.65
fruitfulness	0.54	0.65
fruitless	-0.4	0.6
fruitlessly	-0.4	0.6
fruitlessness	-0.36	0.6
frustrate	-0.5	0.55
frustrated	-0.5	0.55
frustrates	-0.5	0.55
frustrating	-0.6	0.65
frustratingly	-0.6	0.65
fumble	-0.5	0.55
fumbled	-0.5	0.55
fumbles	-0.5	0.55
fumbling	-0.5	0.55
functional	0.3	0.45
functionally	0.3	0.45
funnier	0.5	0.6
funniest	0.65	0.6
funny	0.5	0.6
futile	-0.6	0.65
futilely	-0.6	0.65
futileness	-0.54	0.65
gain	0.5	0.55
gained	0.5	0.55
gaining	0.5	0.55
gains	0.5	0.55
garbage	-0.7	0.7
gem	0.65	0.7
generosities	0.55	0.6
generosity	0.55	0.6
generous	0.6	0.65
generously	0.6	0.65
genius	0.55	0.6
geniuses	0.55	0.6
gentle	0.6	0.65
gentleness	0.54	0.65
gentler	0.5	0.6
gentlest	0.65	0.6
gently	0.6	0.65
genuine	0.6	0.65
genuinely	0.6	0.65
genuineness	0.54	0.65
ghastliness	-0.81	0.85
ghastly	-0.9	0.85
gift	0.55	0.6
gifts	0.55	0.6
glitchy	-0.5	0.5
gloomier	-0.5	0.6
gloomiest	-0.65	0.6
gloomily	-0.6	0.65
gloominess	-0.54	0.65
gloomy	-0.6	0.65
glories	0.55	0.6
glorious	0.9	0.85
gloriously	0.9	0.85
glory	0.55	0.6
glow	0.5	0.55
glowed	0.5	0.55
glowing	0.5	0.55
glows	0.5	0.55
good	0.7	0.6
gorgeous	0.9	0.85
gorgeously	0.9	0.85
graceful	0.6	0.65
gracefully	0.6	0.65
gracefulness	0.54	0.65
graceless	-0.5	0.6
gracelessly	-0.5	0.6
gracelessness	-0.45	0.6
gracious	0.6	0.65
graciously	0.6	0.65
grand	0.6	0.65
grander	0.5	0.6
grandest	0.65	0.6
grandness	0.54	0.65
grateful	0.6	0.65
gratefully	0.6	0.65
gratefulness	0.54	0.65
gratified	0.5	0.55
gratifies	0.5	0.55
gratify	0.5	0.55
gratifying	0.5	0.55
grating	-0.5	0.6
gratitude	0.55	0.6
gratitudes	0.55	0.6
great	0.5	0.6
greater	0.5	0.6
greatest	0.65	0.6
greedily	-0.6	0.65
greediness	-0.54	0.65
greedy	-0.6	0.65
grief	-0.55	0.6
griefs	-0.55	0.6
grim	-0.6	0.65
grimly	-0.6	0.65
grimmer	-0.5	0.6
grimmest	-0.65	0.6
grimness	-0.54	0.65
gripping	0.65	0.7
gross	-0.6	0.65
grosser	-0.5	0.6
grossest	-0.65	0.6
grossly	-0.6	0.65
grossness	-0.54	0.65
gruesome	-0.9	0.85
gruesomely	-0.9	0.85
gruesomeness	-0.81	0.85
guiltily	-0.6	0.65
guiltiness	-0.54	0.65
guilty	-0.6	0.65
handiness	0.27	0.45
handsome	0.6	0.65
handsomely	0.6	0.65
handsomeness	0.54	0.65
handy	0.3	0.45
happier	0.5	0.6
happiest	0.65	0.6
happily	0.6	0.65
happiness	0.54	0.65
happinesses	0.55	0.6
happy	0.6	0.65
harass	-0.5	0.55
harassed	-0.5	0.55
harasses	-0.5	0.55
harassing	-0.5	0.55
hardly	0	0	0.6
hardship	-0.55	0.6
hardships	-0.55	0.6
harm	-0.5	0.55
harmed	-0.5	0.55
harmful	-0.6	0.65
harmfully	-0.6	0.65
harmfulness	-0.54	0.65
harming	-0.5	0.55
harmless	0.4	0.6
harmlessly	0.4	0.6
harmlessness	0.36	0.6
harmonies	0.55	0.6
harmonious	0.6	0.65
harmoniously	0.6	0.65
harmony	0.55	0.6
harms	-0.5	0.55
harsh	-0.6	0.65
harsher	-0.5	0.6
harshest	-0.65	0.6
harshly	-0.6	0.65
harshness	-0.54	0.65
hastily	-0.6	0.65
hastiness	-0.54	0.65
hasty	-0.6	0.65
hate	-0.5	0.55
hated	-0.5	0.55
hateful	-0.6	0.65
hatefully	-0.6	0.65
hatefulness	-0.54	0.65
hates	-0.5	0.55
hating	-0.5	0.55
hatred	-0.55	0.6
hatreds	-0.55	0.6
haughtily	-0.6	0.65
haughtiness	-0.54	0.65
haughty	-0.6	0.65
hazard	-0.55	0.6
hazards	-0.55	0.6
heal	0.5	0.55
healed	0.5	0.55
healing	0.5	0.55
heals	0.5	0.55
healthily	0.6	0.65
healthiness	0.54	0.65
healthy	0.6	0.65
heartless	-0.6	0.65
heartlessly	-0.6	0.65
heartlessness	-0.54	0.65
heartwarming	0.65	0.7
heinous	-0.9	0.85
heinously	-0.9	0.85
help	0.5	0.55
helped	0.5	0.55
helpful	0.6	0.65
helpfully	0.6	0.65
helpfulness	0.54	0.65
helping	0.5	0.55
helpless	-0.6	0.65
helplessly	-0.6	0.65
helplessness	-0.54	0.65
helps	0.5	0.55
hero	0.55	0.65
heroine	0.55	0.65
heroines	0.55	0.65
heros	0.55	0.65
hideous	-0.9	0.85
hideously	-0.9	0.85
highly	0	0	1.35
hit	0.65	0.7
hokey	-0.65	0.7
hollow	-0.3	0.45
hollowness	-0.27	0.45
honest	0.6	0.65
honestly	0.6	0.65
honestness	0.54	0.65
honor	0.5	0.55
honorable	0.6	0.65
honorably	0.6	0.65
honored	0.5	0.55
honoring	0.5	0.55
honors	0.5	0.55
hooray	0.8	0.9
hope	0.55	0.6
hopeful	0.6	0.65
hopefully	0.6	0.65
hopefulness	0.54	0.65
hopeless	-0.6	0.65
hopelessly	-0.6	0.65
hopelessness	-0.54	0.65
hopes	0.55	0.6
horrendous	-0.9	0.85
horrendously	-0.9	0.85
horrible	-0.9	0.85
horribly	-0.9	0.85
horrific	-0.9	0.85
horrifically	-0.9	0.85
horror	-0.55	0.6
horrors	-0.55	0.6
hospitable	0.6	0.65
hospitably	0.6	0.65
hostile	-0.6	0.65
hostilely	-0.6	0.65
hostileness	-0.54	0.65
hostilities	-0.55	0.6
hostility	-0.55	0.6
hugely	0	0	1.4
humiliation	-0.55	0.6
humiliations	-0.55	0.6
humorous	0.6	0.65
humorously	0.6	0.65
hurt	-0.5	0.55
hurtful	-0.6	0.65
hurtfully	-0.6	0.65
hurtfulness	-0.54	0.65
hurting	-0.5	0.55
hurts	-0.5	0.55
hypocrite	-0.55	0.65
hypocrites	-0.55	0.65
iconic	0.65	0.7
ideal	0.6	0.65
ideally	0.6	0.65
idiot	-0.55	0.65
idiots	-0.55	0.65
idle	-0.3	0.45
idleness	-0.27	0.45
idol	0.55	0.65
idols	0.55	0.65
ignorant	-0.6	0.65
ignorantly	-0.6	0.65
ignore	-0.5	0.55
ignored	-0.5	0.55
ignores	-0.5	0.55
ignoring	-0.5	0.55
imbecile	-0.55	0.65
imbeciles	-0.55	0.65
immaculate	0.8	0.7
immaculately	0.8	0.7
immature	-0.3	0.45
immatureness	-0.27	0.45
immensely	0	0	1.5
immersive	0.65	0.7
immoral	-0.6	0.65
immorally	-0.6	0.65
impatient	-0.6	0.65
impatiently	-0.6	0.65
impractical	-0.6	0.65
impractically	-0.6	0.65
impress	0.5	0.55
impressed	0.5	0.55
impresses	0.5	0.55
impressing	0.5	0.55
impressive	0.6	0.65
impressively	0.6	0.65
improve	0.5	0.55
improved	0.5	0.55
improves	0.5	0.55
improving	0.5	0.55
inaccurate	-0.6	0.65
inaccurately	-0.6	0.65
inaccurateness	-0.54	0.65
inadequate	-0.6	0.65
inadequately	-0.6	0.65
inadequateness	-0.54	0.65
incoherent	-0.65	0.7
incompetent	-0.6	0.65
incompetently	-0.6	0.65
incomplete	-0.3	0.45
incompleteness	-0.27	0.45
inconsistent	-0.6	0.65
inconsistently	-0.6	0.65
inconvenient	-0.6	0.65
inconveniently	-0.6	0.65
incredible	0.9	0.85
incredibly	0.9	0.85
indulge	0.5	0.55
indulged	0.5	0.55
indulges	0.5	0.55
indulging	0.5	0.55
ineffective	-0.6	0.65
ineffectively	-0.6	0.65
inefficient	-0.6	0.65
inefficiently	-0.6	0.65
inferior	-0.6	0.65
inferiorly	-0.6	0.65
inferiorness	-0.54	0.65
infest	-0.5	0.55
infested	-0.5	0.55
infesting	-0.5	0.55
infests	-0.5	0.55
inflame	-0.5	0.55
inflamed	-0.5	0.55
inflames	-0.5	0.55
inflaming	-0.5	0.55
inflict	-0.5	0.55
inflicted	-0.5	0.55
inflicting	-0.5	0.55
inflicts	-0.5	0.55
informative	0.3	0.45
informatively	0.3	0.45
infuriating	-0.7	0.8
infuriatingly	-0.7	0.8
injuries	-0.55	0.6
injury	-0.55	0.6
injustice	-0.55	0.6
injustices	-0.55	0.6
innovation	0.55	0.6
innovations	0.55	0.6
innovative	0.6	0.65
innovatively	0.6	0.65
innovator	0.55	0.65
innovators	0.55	0.65
insanely	0	0	1.5
insecure	-0.6	0.65
insecurely	-0.6	0.65
insecureness	-0.54	0.65
insensitive	-0.6	0.65
insensitively	-0.6	0.65
inspire	0.5	0.55
inspired	0.5	0.55
inspires	0.5	0.55
inspiring	0.6	0.65
inspiringly	0.6	0.65
insufferable	-0.8	0.8
insult	-0.5	0.55
insulted	-0.5	0.55
insulting	-0.6	0.65
insultingly	-0.6	0.65
insults	-0.5	0.55
integrities	0.55	0.6
integrity	0.55	0.6
intelligent	0.6	0.65
intelligently	0.6	0.65
intensely	0	0	1.35
interesting	0.3	0.45
interestingly	0.3	0.45
interminable	-0.5	0.6
intimidate	-0.5	0.55
intimidated	-0.5	0.55
intimidates	-0.5	0.55
intimidating	-0.5	0.55
intrigue	0.5	0.55
intrigued	0.5	0.55
intrigues	0.5	0.55
intriguing	0.5	0.55
inventive	0.6	0.65
inventively	0.6	0.65
invigorate	0.5	0.55
invigorated	0.5	0.55
invigorates	0.5	0.55
invigorating	0.5	0.55
irrational	-0.6	0.65
irrationally	-0.6	0.65
irresponsible	-0.6	0.65
irresponsibly	-0.6	0.65
irritate	-0.5	0.55
irritated	-0.5	0.55
irritates	-0.5	0.55
irritating	-0.6	0.65
irritatingly	-0.6	0.65
janky	-0.5	0.6
jarring	-0.4	0.5
jarringly	-0.4	0.5
jealous	-0.6	0.65
jealously	-0.6	0.65
jeopardize	-0.5	0.55
jeopardized	-0.5	0.55
jeopardizes	-0.5	0.55
jeopardizing	-0.5	0.55
jerk	-0.55	0.65
jerks	-0.55	0.65
joy	0.55	0.6
joyful	0.6	0.65
joyfully	0.6	0.65
joyfulness	0.54	0.65
joyless	-0.5	0.6
joylessly	-0.5	0.6
joylessness	-0.45	0.6
joys	0.55	0.6
junk	-0.5	0.6
junky	-0.5	0.6
keen	0.6	0.65
keener	0.5	0.6
keenest	0.65	0.6
keenly	0.6	0.65
keenness	0.54	0.65
kind	0.6	0.65
kinda	0	0	0.8
kinder	0.5	0.6
kindest	0.65	0.6
kindly	0.6	0.65
kindness	0.54	0.65
kindnesses	0.55	0.6
knockoff	-0.65	0.7
lack	-0.5	0.55
lacked	-0.5	0.55
lacking	-0.5	0.55
lackluster	-0.5	0.5
lacks	-0.5	0.55
lame	-0.6	0.65
lamely	-0.6	0.65
lameness	-0.54	0.65
lament	-0.5	0.55
lamented	-0.5	0.55
lamenting	-0.5	0.55
laments	-0.5	0.55
lamer	-0.5	0.6
lamest	-0.65	0.6
laugh	0.5	0.55
laughable	-0.65	0.7
laughed	0.5	0.55
laughing	0.5	0.55
laughs	0.5	0.55
layered	0.3	0.5
lazier	-0.5	0.6
laziest	-0.65	0.6
lazily	-0.6	0.65
laziness	-0.54	0.65
lazy	-0.6	0.65
leader	0.55	0.65
leaders	0.55	0.65
legend	0.55	0.65
legends	0.55	0.65
letdown	-0.65	0.7
liar	-0.55	0.65
liars	-0.55	0.65
lifeless	-0.5	0.5
light	0.3	0.45
lightly	0.3	0.45
lightness	0.27	0.45
likable	0.6	0.65
likably	0.6	0.65
like	0.4	0.5
liked	0.4	0.5
likes	0.4	0.5
limited	-0.3	0.45
liveliness	0.54	0.65
lively	0.6	0.65
loathe	-0.5	0.55
loathed	-0.5	0.55
loathes	-0.5	0.55
loathing	-0.5	0.55
loathsome	-0.9	0.85
loathsomely	-0.9	0.85
loathsomeness	-0.81	0.85
lose	-0.5	0.55
loser	-0.55	0.65
losers	-0.55	0.65
loses	-0.5	0.55
losing	-0.5	0.55
lost	-0.5	0.55
loud	-0.3	0.45
louder	-0.5	0.6
loudest	-0.65	0.6
loudly	-0.3	0.45
loudness	-0.27	0.45
lousily	-0.6	0.65
lousiness	-0.54	0.65
lousy	-0.6	0.65
lovable	0.6	0.65
lovably	0.6	0.65
love	0.5	0.55
loved	0.5	0.55
loveliness	0.54	0.65
lovely	0.6	0.65
loves	0.5	0.55
loving	0.5	0.55
loyal	0.6	0.65
loyally	0.6	0.65
lucid	0.6	0.65
lucidly	0.6	0.65
lucidness	0.54	0.65
luckier	0.5	0.6
luckiest	0.65	0.6
luckily	0.6	0.65
luckiness	0.54	0.65
lucky	0.6	0.65
luxuries	0.55	0.6
luxury	0.55	0.6
maddening	-0.6	0.7
magnificent	0.9	0.85
magnificently	0.9	0.85
majestic	0.9	0.85
majestically	0.9	0.85
malfunction	-0.5	0.55
malfunctioned	-0.5	0.55
malfunctioning	-0.5	0.55
malfunctions	-0.5	0.55
malicious	-0.6	0.65
maliciously	-0.6	0.65
manageable	0.3	0.45
manageably	0.3	0.45
manipulate	-0.5	0.55
manipulated	-0.5	0.55
manipulates	-0.5	0.55
manipulating	-0.5	0.55
mar	-0.5	0.55
mared	-0.5	0.55
marginally	0	0	0.7
maring	-0.5	0.55
mars	-0.5	0.55
marvel	0.55	0.6
marvelous	0.9	0.85
marvelously	0.9	0.85
marvels	0.55	0.6
massively	0	0	1.45
master	0.55	0.65
masterful	0.9	0.85
masterfully	0.9	0.85
masterfulness	0.81	0.85
masteries	0.55	0.6
masterpiece	0.65	0.7
masters	0.55	0.65
mastery	0.55	0.6
matchless	0.9	0.85
matchlessness	0.81	0.85
mean	-0.5	0.6
meandering	-0.3	0.5
meaner	-0.5	0.6
meanest	-0.65	0.6
meaningful	0.5	0.6
meaningfully	0.5	0.6
meaningfulness	0.45	0.6
meaningless	-0.4	0.6
meaninglessly	-0.4	0.6
meaninglessness	-0.36	0.6
mediocre	-0.6	0.65
mediocrely	-0.6	0.65
mediocreness	-0.54	0.65
mediocrity	-0.5	0.6
meh	-0.3	0.7
memorable	0.6	0.65
memorably	0.6	0.65
menace	-0.55	0.6
menaces	-0.55	0.6
mentor	0.55	0.65
mentors	0.55	0.65
merciful	0.5	0.6
mercifully	0.5	0.6
mercifulness	0.45	0.6
merciless	-0.7	0.6
mercilessly	-0.7	0.6
mercilessness	-0.63	0.6
merit	0.55	0.6
merits	0.55	0.6
merrily	0.6	0.65
merriness	0.54	0.65
merry	0.6	0.65
mesmerize	0.5	0.55
mesmerized	0.5	0.55
mesmerizes	0.5	0.55
mesmerizing	0.5	0.55
mess	-0.55	0.6
messes	-0.55	0.6
messier	-0.5	0.6
messiest	-0.65	0.6
messily	-0.6	0.65
messiness	-0.54	0.65
messy	-0.6	0.65
meticulous	0.5	0.5
meticulously	0.5	0.5
mildly	0	0	0.75
mindful	0.6	0.65
mindfully	0.6	0.65
mindfulness	0.54	0.65
mindless	-0.4	0.6
mindlessly	-0.4	0.6
mindlessness	-0.36	0.6
miracle	0.55	0.6
miracles	0.55	0.6
miraculous	0.9	0.85
miraculously	0.9	0.85
miserable	-0.6	0.65
miserably	-0.6	0.65
miseries	-0.55	0.6
misery	-0.55	0.6
misfortune	-0.55	0.6
misfortunes	-0.55	0.6
mishandle	-0.5	0.55
mishandled	-0.5	0.55
mishandles	-0.5	0.55
mishandling	-0.5	0.55
mislead	-0.5	0.55
misleaded	-0.5	0.55
misleading	-0.6	0.65
misleadingly	-0.6	0.65
misleads	-0.5	0.55
mistake	-0.55	0.6
mistakes	-0.55	0.6
mistreat	-0.5	0.55
mistreated	-0.5	0.55
mistreating	-0.5	0.55
mistreats	-0.5	0.55
mock	-0.5	0.55
mocked	-0.5	0.55
mocking	-0.5	0.55
mocks	-0.5	0.55
moderately	0	0	0.85
modern	0.3	0.45
modernly	0.3	0.45
modernness	0.27	0.45
modest	0.3	0.45
modestly	0.3	0.45
modestness	0.27	0.45
monster	-0.55	0.65
monsters	-0.55	0.65
monstrous	-0.9	0.85
monstrously	-0.9	0.85
moodily	-0.6	0.65
moodiness	-0.54	0.65
moody	-0.6	0.65
moron	-0.55	0.65
morons	-0.55	0.65
most	0	0	1.3
motivate	0.5	0.55
motivated	0.5	0.55
motivates	0.5	0.55
motivating	0.5	0.55
mundane	-0.3	0.45
mundaneness	-0.27	0.45
nastier	-0.5	0.6
nastiest	-0.65	0.6
nastily	-0.6	0.65
nastiness	-0.54	0.65
nasty	-0.6	0.65
natural	0.3	0.45
naturally	0.3	0.45
nearly	0	0	0.9
neat	0.6	0.65
neater	0.5	0.6
neatest	0.65	0.6
neatly	0.6	0.65
neatness	0.54	0.65
negative	-0.6	0.65
negatively	-0.6	0.65
neglect	-0.5	0.55
neglected	-0.5	0.55
neglecting	-0.5	0.55
neglects	-0.5	0.55
nervous	-0.6	0.65
nervously	-0.6	0.65
never	-0.2	0.3
nice	0.5	0.6
nicer	0.5	0.6
nicest	0.65	0.6
nightmare	-0.55	0.6
nightmares	-0.55	0.6
nightmarish	-0.9	0.85
nightmarishly	-0.9	0.85
no	-0.2	0.3
noble	0.6	0.65
nobleness	0.54	0.65
nobler	0.5	0.6
noblest	0.65	0.6
nobly	0.6	0.65
nobody	-0.2	0.3
noisily	-0.6	0.65
noisiness	-0.54	0.65
noisy	-0.6	0.65
nonsense	-0.55	0.6
nonsenses	-0.55	0.6
nonsensical	-0.65	0.7
normal	0.3	0.45
normally	0.3	0.45
notable	0.3	0.45
notably	0.3	0.45
nothing	-0.2	0.3
nourish	0.5	0.55
nourished	0.5	0.55
nourishes	0.5	0.55
nourishing	0.6	0.65
nourishingly	0.6	0.65
nuanced	0.5	0.6
nuisance	-0.55	0.6
nuisances	-0.55	0.6
nurturing	0.6	0.65
nurturingly	0.6	0.65
obnoxious	-0.6	0.65
obnoxiously	-0.6	0.65
obscene	-0.9	0.85
obscenely	-0.9	0.85
obstruct	-0.5	0.55
obstructed	-0.5	0.55
obstructing	-0.5	0.55
obstructs	-0.5	0.55
odd	-0.3	0.45
oddly	-0.3	0.45
oddness	-0.27	0.45
offend	-0.5	0.55
offended	-0.5	0.55
offending	-0.5	0.55
offends	-0.5	0.55
offensive	-0.6	0.65
offensively	-0.6	0.65
okay	0.3	0.45
operational	0.3	0.45
operationally	0.3	0.45
opportunities	0.55	0.6
opportunity	0.55	0.6
oppress	-0.5	0.55
oppressed	-0.5	0.55
oppresses	-0.5	0.55
oppressing	-0.5	0.55
optimism	0.55	0.6
optimisms	0.55	0.6
optimist	0.55	0.65
optimistic	0.6	0.65
optimistically	0.6	0.65
optimists	0.55	0.65
orderliness	0.54	0.65
orderly	0.6	0.65
original	0.4	0.5
originality	0.5	0.6
outdated	-0.3	0.45
outrage	-0.55	0.6
outrageous	-0.9	0.85
outrageously	-0.9	0.85
outrages	-0.55	0.6
outstanding	0.9	0.85
outstandingly	0.9	0.85
overcharge	-0.5	0.55
overcharged	-0.5	0.55
overcharges	-0.5	0.55
overcharging	-0.5	0.55
overdue	-0.3	0.45
overdueness	-0.27	0.45
overhyped	-0.65	0.7
overlong	-0.4	0.5
overly	0	0	1.2
overpriced	-0.6	0.65
overpricedly	-0.6	0.65
overrated	-0.65	0.7
overreact	-0.5	0.55
overreacted	-0.5	0.55
overreacting	-0.5	0.55
overreacts	-0.5	0.55
overwrought	-0.4	0.6
pain	-0.55	0.6
painful	-0.6	0.65
painfully	-0.6	0.65
painfulness	-0.54	0.65
painless	0.3	0.45
painlessly	0.3	0.45
painlessness	0.27	0.45
pains	-0.55	0.6
painstaking	0.4	0.5
panic	-0.5	0.55
panicked	-0.5	0.55
panicking	-0.5	0.55
panics	-0.5	0.55
paradise	0.55	0.6
paradises	0.55	0.6
particularly	0	0	1.25
passion	0.55	0.6
passionate	0.6	0.65
passionately	0.6	0.65
passionateness	0.54	0.65
passions	0.55	0.6
pathetic	-0.6	0.65
pathetically	-0.6	0.65
patient	0.6	0.65
patiently	0.6	0.65
peace	0.55	0.6
peaceful	0.6	0.65
peacefully	0.6	0.65
peacefulness	0.54	0.65
peacemaker	0.55	0.65
peacemakers	0.55	0.65
peaces	0.55	0.6
peerless	0.9	0.85
peerlessness	0.81	0.85
penalties	-0.55	0.6
penalty	-0.55	0.6
perfect	0.9	0.85
perfected	0.5	0.55
perfecting	0.5	0.55
perfectly	0.9	0.85
perfectness	0.81	0.85
perfects	0.5	0.55
peril	-0.55	0.6
perils	-0.55	0.6
persevere	0.5	0.55
persevered	0.5	0.55
perseveres	0.5	0.55
persevering	0.5	0.55
pessimist	-0.55	0.65
pessimists	-0.55	0.65
pest	-0.55	0.65
pests	-0.55	0.65
pettily	-0.6	0.65
pettiness	-0.54	0.65
petty	-0.6	0.65
phenomenal	0.9	0.85
phenomenally	0.9	0.85
pities	-0.55	0.6
pity	-0.55	0.6
plague	-0.55	0.6
plagues	-0.55	0.6
plain	-0.3	0.45
plainly	-0.3	0.45
plainness	-0.27	0.45
pleasant	0.6	0.65
pleasantly	0.6	0.65
please	0.5	0.55
pleased	0.5	0.55
pleases	0.5	0.55
pleasing	0.6	0.65
pleasingly	0.6	0.65
pleasure	0.55	0.6
pleasures	0.55	0.6
plentiful	0.6	0.65
plentifully	0.6	0.65
plentifulness	0.54	0.65
plodding	-0.4	0.5
plummet	-0.5	0.55
plummeted	-0.5	0.55
plummeting	-0.5	0.55
plummets	-0.5	0.55
pointless	-0.6	0.65
pointlessly	-0.6	0.65
pointlessness	-0.54	0.65
polished	0.6	0.65
polishedly	0.6	0.65
polite	0.6	0.65
politely	0.6	0.65
politeness	0.54	0.65
pollute	-0.5	0.55
polluted	-0.5	0.55
pollutes	-0.5	0.55
polluting	-0.5	0.55
poor	-0.6	0.65
poorer	-0.5	0.6
poorest	-0.65	0.6
poorly	-0.6	0.65
poorness	-0.54	0.65
popular	0.6	0.65
popularly	0.6	0.65
popularness	0.54	0.65
positive	0.6	0.65
positively	0.6	0.65
poverties	-0.55	0.6
poverty	-0.55	0.6
powerful	0.6	0.65
powerfully	0.6	0.65
powerfulness	0.54	0.65
powerless	-0.4	0.6
powerlessly	-0.4	0.6
powerlessness	-0.36	0.6
practical	0.3	0.45
practically	0.3	0.45
praise	0.5	0.55
praised	0.5	0.55
praises	0.5	0.55
praiseworthily	0.6	0.65
praiseworthiness	0.54	0.65
praiseworthy	0.6	0.65
praising	0.5	0.55
precious	0.6	0.65
preciously	0.6	0.65
predictable	-0.65	0.7
prejudice	-0.55	0.6
prejudices	-0.55	0.6
presentable	0.3	0.45
presentably	0.3	0.45
pretentious	-0.6	0.65
pretentiously	-0.6	0.65
pretty	0	0	1.1
pride	0.55	0.6
prides	0.55	0.6
primitive	-0.6	0.65
primitively	-0.6	0.65
privilege	0.55	0.6
privileges	0.55	0.6
problem	-0.55	0.6
problematic	-0.6	0.65
problematically	-0.6	0.65
problems	-0.55	0.6
productive	0.6	0.65
productively	0.6	0.65
profound	0.6	0.65
profoundly	0.6	0.65
profoundness	0.54	0.65
progress	0.55	0.6
progresses	0.55	0.6
promise	0.55	0.6
promises	0.55	0.6
promote	0.5	0.55
promoted	0.5	0.55
promotes	0.5	0.55
promoting	0.5	0.55
prosper	0.5	0.55
prospered	0.5	0.55
prospering	0.5	0.55
prosperities	0.55	0.6
prosperity	0.55	0.6
prosperous	0.6	0.65
prosperously	0.6	0.65
prospers	0.5	0.55
protect	0.5	0.55
protected	0.5	0.55
protecting	0.5	0.55
protector	0.55	0.65
protectors	0.55	0.65
protects	0.5	0.55
proud	0.6	0.65
prouder	0.5	0.6
proudest	0.65	0.6
proudly	0.6	0.65
proudness	0.54	0.65
provoke	-0.5	0.55
provoked	-0.5	0.55
provokes	-0.5	0.55
provoking	-0.5	0.55
punchy	0.65	0.7
punish	-0.5	0.55
punished	-0.5	0.55
punishes	-0.5	0.55
punishing	-0.5	0.55
pure	0.6	0.65
purely	0.6	0.65
pureness	0.54	0.65
purer	0.5	0.6
purest	0.65	0.6
pushily	-0.6	0.65
pushiness	-0.54	0.65
pushy	-0.6	0.65
qualities	0.55	0.6
quality	0.55	0.6
questionable	-0.3	0.45
questionably	-0.3	0.45
quick	0.6	0.65
quicker	0.5	0.6
quickest	0.65	0.6
quickly	0.6	0.65
quickness	0.54	0.65
quiet	0.3	0.45
quietly	0.3	0.45
quietness	0.27	0.45
quite	0	0	1.15
quitter	-0.55	0.65
quitters	-0.55	0.65
radiant	0.9	0.85
radiantly	0.9	0.85
rage	-0.55	0.6
rages	-0.55	0.6
random	-0.3	0.45
randomness	-0.27	0.45
ransack	-0.5	0.55
ransacked	-0.5	0.55
ransacking	-0.5	0.55
ransacks	-0.5	0.55
rather	0	0	0.95
really	0	0	1.25
reasonable	0.3	0.45
reasonably	0.3	0.45
reassure	0.5	0.55
reassured	0.5	0.55
reassures	0.5	0.55
reassuring	0.5	0.55
reckless	-0.6	0.65
recklessly	-0.6	0.65
recklessness	-0.54	0.65
recommend	0.5	0.55
recommendable	0.6	0.6
recommended	0.5	0.55
recommending	0.5	0.55
recommends	0.5	0.55
recover	0.5	0.55
recovered	0.5	0.55
recovering	0.5	0.55
recovers	0.5	0.55
rectified	0.5	0.55
rectifies	0.5	0.55
rectify	0.5	0.55
rectifying	0.5	0.55
redeem	0.5	0.55
redeemed	0.5	0.55
redeeming	0.5	0.55
redeems	0.5	0.55
refined	0.6	0.65
refinedly	0.6	0.65
refresh	0.5	0.55
refreshed	0.5	0.55
refreshes	0.5	0.55
refreshing	0.6	0.65
refreshingly	0.6	0.65
regret	-0.5	0.55
regretful	-0.5	0.6
regretfully	-0.5	0.6
regretfulness	-0.45	0.6
regrets	-0.5	0.55
regrettable	-0.6	0.65
regrettably	-0.6	0.65
regretted	-0.5	0.55
regretting	-0.5	0.55
reject	-0.5	0.55
rejected	-0.5	0.55
rejecting	-0.5	0.55
rejects	-0.5	0.55
rejoice	0.5	0.55
rejoiced	0.5	0.55
rejoices	0.5	0.55
rejoicing	0.5	0.55
rejuvenate	0.5	0.55
rejuvenated	0.5	0.55
rejuvenates	0.5	0.55
rejuvenating	0.5	0.55
relatively	0	0	0.85
relax	0.5	0.55
relaxed	0.5	0.55
relaxes	0.5	0.55
relaxing	0.5	0.55
relevant	0.3	0.45
relevantly	0.3	0.45
reliable	0.6	0.65
reliably	0.6	0.65
relief	0.55	0.6
reliefs	0.55	0.6
relish	0.5	0.55
relished	0.5	0.55
relishes	0.5	0.55
relishing	0.5	0.55
remarkable	0.9	0.85
remarkably	0.9	0.85
repel	-0.5	0.55
repeled	-0.5	0.55
repeling	-0.5	0.55
repels	-0.5	0.55
repetitive	-0.6	0.65
repetitively	-0.6	0.65
repugnant	-0.9	0.85
repugnantly	-0.9	0.85
repulsive	-0.9	0.85
repulsively	-0.9	0.85
rescue	0.5	0.55
rescued	0.5	0.55
rescues	0.5	0.55
rescuing	0.5	0.55
resent	-0.5	0.55
resented	-0.5	0.55
resentful	-0.6	0.65
resentfully	-0.6	0.65
resentfulness	-0.54	0.65
resenting	-0.5	0.55
resents	-0.5	0.55
resign	-0.5	0.55
resigned	-0.5	0.55
resigning	-0.5	0.55
resigns	-0.5	0.55
resourceful	0.6	0.65
resourcefully	0.6	0.65
resourcefulness	0.54	0.65
respect	0.5	0.55
respectable	0.6	0.65
respectably	0.6	0.65
respected	0.5	0.55
respectful	0.5	0.6
respectfully	0.5	0.6
respectfulness	0.45	0.6
respecting	0.5	0.55
respects	0.5	0.55
resplendent	0.9	0.85
resplendently	0.9	0.85
responsive	0.6	0.65
responsively	0.6	0.65
restful	0.3	0.6
restfully	0.3	0.6
restfulness	0.27	0.6
restless	-0.4	0.6
restlessly	-0.4	0.6
restlessness	-0.36	0.6
restore	0.5	0.55
restored	0.5	0.55
restores	0.5	0.55
restoring	0.5	0.55
revitalize	0.5	0.55
revitalized	0.5	0.55
revitalizes	0.5	0.55
revitalizing	0.5	0.55
revive	0.5	0.55
revived	0.5	0.55
revives	0.5	0.55
reviving	0.5	0.55
revolting	-0.9	0.85
revoltingly	-0.9	0.85
reward	0.5	0.55
rewarded	0.5	0.55
rewarding	0.6	0.65
rewardingly	0.6	0.65
rewards	0.5	0.55
rewatchable	0.65	0.7
rich	0.6	0.65
richer	0.5	0.6
richest	0.65	0.6
richly	0.6	0.65
richness	0.54	0.65
ridiculously	0	0	1.4
rigid	-0.6	0.65
rigidly	-0.6	0.65
rigidness	-0.54	0.65
ripoff	-0.65	0.7
riveting	0.65	0.7
robust	0.6	0.65
robustly	0.6	0.65
robustness	0.54	0.65
romantic	0.6	0.65
romantically	0.6	0.65
rotten	-0.9	0.85
rottenly	-0.9	0.85
rottenness	-0.81	0.85
rough	-0.3	0.45
rougher	-0.5	0.6
roughest	-0.65	0.6
roughly	-0.3	0.45
roughness	-0.27	0.45
rubbish	-0.6	0.7
rude	-0.6	0.65
rudely	-0.6	0.65
rudeness	-0.54	0.65
ruder	-0.5	0.6
rudest	-0.65	0.6
ruin	-0.5	0.55
ruined	-0.5	0.55
ruining	-0.5	0.55
ruinous	-0.9	0.85
ruinously	-0.9	0.85
ruins	-0.5	0.55
rustiness	-0.27	0.45
rusty	-0.3	0.45
ruthless	-0.6	0.65
ruthlessly	-0.6	0.65
ruthlessness	-0.54	0.65
sabotage	-0.5	0.55
sabotaged	-0.5	0.55
sabotages	-0.5	0.55
sabotaging	-0.5	0.55
sad	-0.6	0.65
sadden	-0.5	0.55
saddened	-0.5	0.55
saddening	-0.5	0.55
saddens	-0.5	0.55
sadder	-0.5	0.6
saddest	-0.65	0.6
sadly	-0.6	0.65
sadness	-0.54	0.65
safe	0.6	0.65
safely	0.6	0.65
safeness	0.54	0.65
safer	0.5	0.6
safest	0.65	0.6
satisfied	0.5	0.55
satisfies	0.5	0.55
satisfy	0.5	0.55
satisfying	0.6	0.65
satisfyingly	0.6	0.65
savage	-0.9	0.85
savagely	-0.9	0.85
savageness	-0.81	0.85
save	0.5	0.55
saved	0.5	0.55
saves	0.5	0.55
saving	0.5	0.55
savior	0.55	0.65
saviors	0.55	0.65
savvily	0.6	0.65
savviness	0.54	0.65
savvy	0.6	0.65
scam	-0.5	0.55
scamed	-0.5	0.55
scaming	-0.5	0.55
scams	-0.5	0.55
scandal	-0.55	0.6
scandals	-0.55	0.6
scarce	-0.3	0.45
scarcely	-0.3	0.45
scarceness	-0.27	0.45
scare	-0.5	0.55
scared	-0.5	0.55
scares	-0.5	0.55
scarily	-0.6	0.65
scariness	-0.54	0.65
scaring	-0.5	0.55
scary	-0.6	0.65
scold	-0.5	0.55
scolded	-0.5	0.55
scolding	-0.5	0.55
scolds	-0.5	0.55
seamless	0.65	0.7
secure	0.6	0.65
securely	0.6	0.65
secureness	0.54	0.65
selfish	-0.6	0.65
selfishly	-0.6	0.65
selfishness	-0.54	0.65
sellout	-0.65	0.7
sensational	0.9	0.85
sensationally	0.9	0.85
sensible	0.6	0.65
sensibly	0.6	0.65
serene	0.6	0.65
serenely	0.6	0.65
sereneness	0.54	0.65
shabbily	-0.6	0.65
shabbiness	-0.54	0.65
shabby	-0.6	0.65
shadiness	-0.54	0.65
shady	-0.6	0.65
shakier	-0.5	0.6
shakiest	-0.65	0.6
shakily	-0.3	0.45
shakiness	-0.27	0.45
shaky	-0.3	0.45
shallow	-0.6	0.65
shallowly	-0.6	0.65
shallowness	-0.54	0.65
shame	-0.5	0.55
shamed	-0.5	0.55
shameful	-0.9	0.85
shamefully	-0.9	0.85
shamefulness	-0.81	0.85
shameless	-0.7	0.6
shamelessly	-0.7	0.6
shamelessness	-0.63	0.6
shames	-0.5	0.55
shaming	-0.5	0.55
sharp	0.6	0.65
sharper	0.5	0.6
sharpest	0.65	0.6
sharply	0.6	0.65
sharpness	0.54	0.65
shininess	0.54	0.65
shiny	0.6	0.65
shoddily	-0.6	0.65
shoddiness	-0.54	0.65
shoddy	-0.6	0.65
showstopper	0.65	0.7
sick	-0.6	0.65
sickening	-0.9	0.85
sickeningly	-0.9	0.85
sicker	-0.5	0.6
sickest	-0.65	0.6
sickness	-0.54	0.65
significant	0.6	0.65
significantly	0.6	0.65
simple	0.3	0.45
simpleness	0.27	0.45
simplified	0.5	0.55
simplifies	0.5	0.55
simplify	0.5	0.55
simplifying	0.5	0.55
simply	0.3	0.45
sincere	0.6	0.65
sincerely	0.6	0.65
sincereness	0.54	0.65
skillful	0.6	0.65
skillfully	0.6	0.65
skillfulness	0.54	0.65
skillless	-0.4	0.6
skilllessly	-0.4	0.6
skilllessness	-0.36	0.6
slacker	-0.55	0.65
slackers	-0.55	0.65
slander	-0.5	0.55
slandered	-0.5	0.55
slandering	-0.5	0.55
slanders	-0.5	0.55
slick	0.65	0.7
slightly	0	0	0.7
sloppily	-0.6	0.65
sloppiness	-0.54	0.65
sloppy	-0.6	0.65
slow	-0.6	0.65
slower	-0.5	0.6
slowest	-0.65	0.6
slowly	-0.6	0.65
slowness	-0.54	0.65
sluggish	-0.6	0.65
sluggishly	-0.6	0.65
sluggishness	-0.54	0.65
smart	0.6	0.65
smarter	0.5	0.6
smartest	0.65	0.6
smartly	0.6	0.65
smartness	0.54	0.65
smear	-0.5	0.55
smeared	-0.5	0.55
smearing	-0.5	0.55
smears	-0.5	0.55
smile	0.5	0.55
smiled	0.5	0.55
smiles	0.5	0.55
smiling	0.5	0.55
smooth	0.6	0.65
smoother	0.5	0.6
smoothest	0.65	0.6
smoothly	0.6	0.65
smoothness	0.54	0.65
snappy	0.65	0.7
snob	-0.55	0.65
snobs	-0.55	0.65
snoozefest	-0.65	0.7
so	0	0	1.2
sociable	0.6	0.65
sociably	0.6	0.65
soft	0.3	0.45
softer	0.5	0.6
softest	0.65	0.6
softly	0.3	0.45
softness	0.27	0.45
solid	0.6	0.65
solidly	0.6	0.65
solidness	0.54	0.65
somewhat	0	0	0.8
soothe	0.5	0.55
soothed	0.5	0.55
soothes	0.5	0.55
soothing	0.6	0.65
soothingly	0.6	0.65
sophisticated	0.6	0.65
sophisticatedly	0.6	0.65
sore	-0.6	0.65
soreness	-0.54	0.65
sorrow	-0.55	0.6
sorrows	-0.55	0.6
sorta	0	0	0.8
soulless	-0.6	0.6
sour	-0.6	0.65
sourer	-0.5	0.6
sourest	-0.65	0.6
sourly	-0.6	0.65
sourness	-0.54	0.65
spectacular	0.9	0.85
spectacularly	0.9	0.85
spectacularness	0.81	0.85
spirited	0.6	0.65
spiritedly	0.6	0.65
spiteful	-0.6	0.65
spitefully	-0.6	0.65
spitefulness	-0.54	0.65
splendid	0.9	0.85
splendidly	0.9	0.85
splendidness	0.81	0.85
spoil	-0.5	0.55
spoiled	-0.5	0.55
spoiling	-0.5	0.55
spoils	-0.5	0.55
spotless	0.7	0.7
spotlessly	0.7	0.7
squander	-0.5	0.55
squandered	-0.5	0.55
squandering	-0.5	0.55
squanders	-0.5	0.55
stabilize	0.5	0.55
stabilized	0.5	0.55
stabilizes	0.5	0.55
stabilizing	0.5	0.55
stable	0.3	0.45
stably	0.3	0.45
stagnate	-0.5	0.55
stagnated	-0.5	0.55
stagnates	-0.5	0.55
stagnating	-0.5	0.55
stale	-0.6	0.65
staleness	-0.54	0.65
staler	-0.5	0.6
stalest	-0.65	0.6
stall	-0.5	0.55
stalled	-0.5	0.55
stalling	-0.5	0.55
stalls	-0.5	0.55
standard	0.3	0.45
standardly	0.3	0.45
standardness	0.27	0.45
standout	0.65	0.7
star	0.55	0.65
stars	0.55	0.65
steadily	0.6	0.65
steadiness	0.54	0.65
steady	0.6	0.65
steal	-0.5	0.55
stealing	-0.5	0.55
steals	-0.5	0.55
stellar	0.9	0.85
stellarly	0.9	0.85
stellarness	0.81	0.85
stiff	-0.3	0.45
stiffly	-0.3	0.45
stiffness	-0.27	0.45
stimulate	0.5	0.55
stimulated	0.5	0.55
stimulates	0.5	0.55
stimulating	0.5	0.55
stingily	-0.6	0.65
stinginess	-0.54	0.65
stingy	-0.6	0.65
stole	-0.5	0.55
stolen	-0.5	0.55
strain	-0.5	0.55
strained	-0.5	0.55
straining	-0.5	0.55
strains	-0.5	0.55
strange	-0.6	0.65
strangely	-0.6	0.65
strangeness	-0.54	0.65
streamline	0.5	0.55
streamlined	0.5	0.55
streamlines	0.5	0.55
streamlining	0.5	0.55
strength	0.55	0.6
strengthen	0.5	0.55
strengthened	0.5	0.55
strengthening	0.5	0.55
strengthens	0.5	0.55
strengths	0.55	0.6
stress	-0.55	0.6
stresses	-0.55	0.6
stressful	-0.6	0.65
stressfully	-0.6	0.65
stressfulness	-0.54	0.65
stressless	0.3	0.6
stresslessly	0.3	0.6
stresslessness	0.27	0.6
strong	0.6	0.65
stronger	0.5	0.6
strongest	0.65	0.6
strongly	0.6	0.65
strongness	0.54	0.65
struggle	-0.5	0.55
struggled	-0.5	0.55
struggles	-0.5	0.55
struggling	-0.5	0.55
stubborn	-0.6	0.65
stubbornly	-0.6	0.65
stubbornness	-0.54	0.65
stumble	-0.5	0.55
stumbled	-0.5	0.55
stumbles	-0.5	0.55
stumbling	-0.5	0.55
stunning	0.9	0.85
stunningly	0.9	0.85
stupid	-0.6	0.65
stupidly	-0.6	0.65
stupidness	-0.54	0.65
stylish	0.65	0.7
sublime	0.9	0.85
sublimely	0.9	0.85
sublimeness	0.81	0.85
subpar	-0.5	0.5
succeed	0.5	0.55
succeeded	0.5	0.55
succeeding	0.5	0.55
succeeds	0.5	0.55
success	0.55	0.6
successes	0.55	0.6
successful	0.6	0.65
successfully	0.6	0.65
successfulness	0.54	0.65
sucked	-0.7	0.8
sucks	-0.7	0.8
suffer	-0.5	0.55
suffered	-0.5	0.55
suffering	-0.5	0.55
sufferings	-0.55	0.6
suffers	-0.5	0.55
sufficient	0.3	0.45
sufficiently	0.3	0.45
super	0	0	1.35
superb	0.9	0.85
superbly	0.9	0.85
superbness	0.81	0.85
support	0.5	0.55
supported	0.5	0.55
supporter	0.55	0.65
supporters	0.55	0.65
supporting	0.5	0.55
supportive	0.6	0.65
supportively	0.6	0.65
supports	0.5	0.55
supremely	0	0	1.45
surprise	0.5	0.55
surprised	0.5	0.55
surprises	0.5	0.55
surprising	0.5	0.55
surprisingly	0	0	1.2
suspicious	-0.6	0.65
suspiciously	-0.6	0.65
sweet	0.6	0.65
sweeter	0.5	0.6
sweetest	0.65	0.6
sweetheart	0.55	0.65
sweethearts	0.55	0.65
sweetly	0.6	0.65
sweetness	0.54	0.65
tackily	-0.6	0.65
tackiness	-0.54	0.65
tacky	-0.6	0.65
tactful	0.4	0.6
tactfully	0.4	0.6
tactfulness	0.36	0.6
tactless	-0.4	0.6
tactlessly	-0.4	0.6
tactlessness	-0.36	0.6
talent	0.55	0.6
talented	0.6	0.65
talentedly	0.6	0.65
talents	0.55	0.6
tarnish	-0.5	0.55
tarnished	-0.5	0.55
tarnishes	-0.5	0.55
tarnishing	-0.5	0.55
tasteful	0.4	0.6
tastefully	0.4	0.6
tastefulness	0.36	0.6
tasteless	-0.6	0.65
tastelessly	-0.6	0.65
tastelessness	-0.54	0.65
tedious	-0.6	0.65
tediously	-0.6	0.65
tense	-0.6	0.65
tensely	-0.6	0.65
tenseness	-0.54	0.65
terrible	-0.9	0.85
terribly	-0.9	0.85
terrific	0.9	0.85
terrifically	0.9	0.85
terror	-0.55	0.6
terrors	-0.55	0.6
thank	0.5	0.55
thanked	0.5	0.55
thankful	0.6	0.65
thankfully	0.6	0.65
thankfulness	0.54	0.65
thanking	0.5	0.55
thankless	-0.5	0.6
thanklessly	-0.5	0.6
thanklessness	-0.45	0.6
thanks	0.5	0.55
theft	-0.55	0.6
thefts	-0.55	0.6
thief	-0.55	0.65
thiefs	-0.55	0.65
thorough	0.6	0.65
thoroughly	0.6	0.65
thoroughness	0.54	0.65
thoughtful	0.6	0.65
thoughtfully	0.6	0.65
thoughtfulness	0.54	0.65
thoughtless	-0.4	0.6
thoughtlessly	-0.4	0.6
thoughtlessness	-0.36	0.6
threadbare	-0.4	0.5
threat	-0.55	0.6
threaten	-0.5	0.55
threatened	-0.5	0.55
threatening	-0.6	0.65
threateningly	-0.6	0.65
threatens	-0.5	0.55
threats	-0.55	0.6
thrill	0.5	0.55
thrilled	0.5	0.55
thrilling	0.5	0.55
thrills	0.5	0.55
thriving	0.6	0.65
tidier	0.5	0.6
tidiest	0.65	0.6
tidily	0.6	0.65
tidiness	0.54	0.65
tidy	0.6	0.65
tight	0.65	0.7
timeless	0.65	0.7
tiresome	-0.6	0.65
tiresomely	-0.6	0.65
tiresomeness	-0.54	0.65
tolerable	0.3	0.45
tolerably	0.3	0.45
too	0	0	1.15
torment	-0.5	0.55
tormented	-0.5	0.55
tormenting	-0.5	0.55
torments	-0.5	0.55
totally	0	0	1.4
toxic	-0.6	0.65
toxically	-0.6	0.65
tragedies	-0.55	0.6
tragedy	-0.55	0.6
tragic	-0.6	0.65
tragically	-0.6	0.65
trainwreck	-0.65	0.7
traitor	-0.55	0.65
traitors	-0.55	0.65
trash	-0.5	0.55
trashed	-0.5	0.55
trashes	-0.5	0.55
trashing	-0.5	0.55
trashy	-0.6	0.7
trauma	-0.55	0.6
traumas	-0.55	0.6
treasure	0.5	0.55
treasured	0.5	0.55
treasures	0.5	0.55
treasuring	0.5	0.55
tremendous	0.9	0.85
tremendously	0.9	0.85
triumph	0.5	0.55
triumphed	0.5	0.55
triumphing	0.5	0.55
triumphs	0.5	0.55
trivial	-0.3	0.45
trivially	-0.3	0.45
trouble	-0.5	0.55
troubled	-0.5	0.55
troubles	-0.5	0.55
troublesome	-0.6	0.65
troublesomely	-0.6	0.65
troublesomeness	-0.54	0.65
troubling	-0.5	0.55
truly	0	0	1.3
trust	0.5	0.55
trusted	0.5	0.55
trusting	0.5	0.55
trusts	0.5	0.55
trustworthily	0.6	0.65
trustworthiness	0.54	0.65
trustworthy	0.6	0.65
truthful	0.6	0.65
truthfully	0.6	0.65
truthfulness	0.54	0.65
truthless	-0.5	0.6
truthlessly	-0.5	0.6
truthlessness	-0.45	0.6
turkey	-0.65	0.7
tyrant	-0.55	0.65
tyrants	-0.55	0.65
ugh	-0.5	0.8
uglier	-0.5	0.6
ugliest	-0.65	0.6
ugliness	-0.54	0.65
ugly	-0.6	0.65
unacceptable	-0.6	0.65
unacceptably	-0.6	0.65
unbearable	-0.9	0.85
unbearably	-0.9	0.85
unbeatable	0.9	0.85
unclear	-0.3	0.45
unclearly	-0.3	0.45
unclearness	-0.27	0.45
uncomfortable	-0.6	0.65
uncomfortably	-0.6	0.65
unconvincing	-0.4	0.5
undercooked	-0.4	0.5
undermine	-0.5	0.55
undermined	-0.5	0.55
undermines	-0.5	0.55
undermining	-0.5	0.55
underrated	0.65	0.7
underwhelming	-0.5	0.6
uneven	-0.3	0.45
unevenly	-0.3	0.45
unevenness	-0.27	0.45
unfair	-0.6	0.65
unfairly	-0.6	0.65
unfairness	-0.54	0.65
unforgivable	-0.9	0.85
unforgivably	-0.9	0.85
unfortunate	-0.6	0.65
unfortunately	-0.6	0.65
unfortunateness	-0.54	0.65
unfriendliness	-0.54	0.65
unfriendly	-0.6	0.65
ungrateful	-0.6	0.65
ungratefully	-0.6	0.65
ungratefulness	-0.54	0.65
unhappily	-0.6	0.65
unhappiness	-0.54	0.65
unhappy	-0.6	0.65
unhealthily	-0.6	0.65
unhealthiness	-0.54	0.65
unhealthy	-0.6	0.65
uninspired	-0.5	0.5
uninspiring	-0.5	0.5
unmatched	0.9	0.85
unoriginal	-0.4	0.5
unpleasant	-0.6	0.65
unpleasantly	-0.6	0.65
unprofessional	-0.6	0.65
unprofessionally	-0.6	0.65
unreadable	-0.65	0.7
unreliable	-0.6	0.65
unreliably	-0.6	0.65
unstable	-0.6	0.65
unstably	-0.6	0.65
untidily	-0.6	0.65
untidiness	-0.54	0.65
untidy	-0.6	0.65
unusual	-0.3	0.45
unusually	-0.3	0.45
unwatchable	-0.65	0.7
unwise	-0.6	0.65
unwisely	-0.6	0.65
unwiseness	-0.54	0.65
upbeat	0.6	0.65
upbeatly	0.6	0.65
upbeatness	0.54	0.65
uplift	0.5	0.55
uplifted	0.5	0.55
uplifting	0.6	0.65
upliftingly	0.6	0.65
uplifts	0.5	0.55
upset	-0.5	0.55
upsets	-0.5	0.55
upsetting	-0.6	0.65
upsettingly	-0.6	0.65
usable	0.3	0.45
usably	0.3	0.45
useful	0.6	0.65
usefully	0.6	0.65
usefulness	0.54	0.65
useless	-0.6	0.65
uselessly	-0.6	0.65
uselessness	-0.54	0.65
utterly	0	0	1.5
vague	-0.6	0.65
vaguely	-0.6	0.65
vagueness	-0.54	0.65
vaguer	-0.5	0.6
vaguest	-0.65	0.6
valiant	0.6	0.65
valiantly	0.6	0.65
valuable	0.6	0.65
valuably	0.6	0.65
value	0.5	0.55
valued	0.5	0.55
values	0.5	0.55
valuing	0.5	0.55
vandal	-0.55	0.65
vandalize	-0.5	0.55
vandalized	-0.5	0.55
vandalizes	-0.5	0.55
vandalizing	-0.5	0.55
vandals	-0.55	0.65
vastly	0	0	1.4
versatile	0.6	0.65
versatilely	0.6	0.65
versatileness	0.54	0.65
very	0	0	1.3
viable	0.3	0.45
viably	0.3	0.45
vibrant	0.6	0.65
vibrantly	0.6	0.65
vicious	-0.9	0.85
viciously	-0.9	0.85
victories	0.55	0.6
victorious	0.6	0.65
victoriously	0.6	0.65
victory	0.55	0.6
vigorous	0.6	0.65
vigorously	0.6	0.65
vile	-0.9	0.85
vilely	-0.9	0.85
vileness	-0.81	0.85
villain	-0.55	0.6
villainous	-0.9	0.85
villainously	-0.9	0.85
villains	-0.55	0.6
violate	-0.5	0.55
violated	-0.5	0.55
violates	-0.5	0.55
violating	-0.5	0.55
violence	-0.55	0.6
violences	-0.55	0.6
virtue	0.55	0.6
virtues	0.55	0.6
virtuoso	0.55	0.65
virtuosos	0.55	0.65
virtuous	0.6	0.65
virtuously	0.6	0.65
visionaries	0.55	0.65
visionary	0.55	0.65
vivid	0.5	0.6
vividly	0.5	0.6
vulgar	-0.6	0.65
vulgarly	-0.6	0.65
vulgarness	-0.54	0.65
warm	0.6	0.65
warmer	0.5	0.6
warmest	0.65	0.6
warmly	0.6	0.65
warmness	0.54	0.65
warmth	0.55	0.6
warmths	0.55	0.6
waste	-0.5	0.55
wasted	-0.5	0.55
wasteful	-0.5	0.6
wastefully	-0.5	0.6
wastefulness	-0.45	0.6
wastes	-0.5	0.55
wasting	-0.5	0.55
watchable	0.65	0.7
watchful	0.3	0.45
watchfully	0.3	0.45
watchfulness	0.27	0.45
weak	-0.6	0.65
weaken	-0.5	0.55
weakened	-0.5	0.55
weakening	-0.5	0.55
weakens	-0.5	0.55
weaker	-0.5	0.6
weakest	-0.65	0.6
weakly	-0.6	0.65
weakness	-0.54	0.65
weaknesses	-0.55	0.6
wealth	0.55	0.6
wealths	0.55	0.6
wearily	-0.6	0.65
weariness	-0.54	0.65
weary	-0.6	0.65
weird	-0.5	0.6
weirder	-0.5	0.6
weirdest	-0.65	0.6
welcome	0.5	0.55
welcomed	0.5	0.55
welcomes	0.5	0.55
welcoming	0.6	0.65
well	0.4	0.4
whiner	-0.55	0.65
whiners	-0.55	0.65
wild	-0.5	0.6
wilder	-0.5	0.6
wildest	-0.65	0.6
wildly	0	0	1.4
win	0.5	0.55
winner	0.55	0.65
winners	0.55	0.65
winning	0.5	0.55
wins	0.5	0.55
wisdom	0.55	0.6
wisdoms	0.55	0.6
wise	0.6	0.65
wisely	0.6	0.65
wiseness	0.54	0.65
wiser	0.5	0.6
wisest	0.65	0.6
wittily	0.6	0.65
wittiness	0.54	0.65
witty	0.6	0.65
won	0.5	0.55
wonder	0.55	0.6
wonderful	0.9	0.85
wonderfully	0.9	0.85
wonderfulness	0.81	0.85
wonders	0.55	0.6
wondrous	0.9	0.85
wondrously	0.9	0.85
wooden	-0.4	0.5
workable	0.3	0.45
workably	0.3	0.45
worried	-0.5	0.55
worries	-0.5	0.55
worry	-0.5	0.55
worrying	-0.5	0.55
worse	-0.5	0.6
worsen	-0.5	0.55
worsened	-0.5	0.55
worsening	-0.5	0.55
worsens	-0.5	0.55
worser	-0.5	0.6
worsest	-0.65	0.6
worst	-1	0.8
worthful	0.5	0.6
worthfully	0.5	0.6
worthfulness	0.45	0.6
worthily	0.6	0.65
worthiness	0.54	0.65
worthless	-0.6	0.65
worthlessly	-0.6	0.65
worthlessness	-0.54	0.65
worthwhile	0.6	0.6
worthy	0.6	0.65
wow	0.7	0.9
wreck	-0.5	0.55
wrecked	-0.5	0.55
wrecking	-0.5	0.55
wrecks	-0.5	0.55
wretched	-0.9	0.85
wretchedly	-0.9	0.85
wrong	-0.5	0.5
wrongly	-0.5	0.5
yay	0.7	0.9
yes	0.3	0.4
youthful	0.6	0.65
youthfulness	0.54	0.65
yuck	-0.7	0.9
zealous	0.6	0.65
zealously	0.6	0.65
)lexicon";

}  // namespace detail
}  // namespace voxkit

#endif  // VOXKIT_SENTIMENT_LEXICON_DATA_HPP_
